#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lawvere/chains.hpp"
#include "lawvere/homology.hpp"
#include "lawvere/monoid.hpp"
#include "lawvere/rewrite.hpp"

namespace lawvere {

/// Parses the `.lwv` presentation format.  Errors carry "line L, column C".
Trs parse_presentation(std::string_view text);
Trs load_presentation(const std::filesystem::path& path);

/// Text that parses back to a structurally equal Trs.
std::string print_presentation(const Trs& R);

monoid::Srs parse_srs(std::string_view text);
monoid::Srs load_srs(const std::filesystem::path& path);
std::string print_srs(const monoid::Srs& R);

/// Resolves a `--coeff` value ("auto" or an integer) against degree(R).
/// Throws unsupported-degree unless the result is 0 or a prime compatible with the degree.
std::uint64_t resolve_coefficients(const Trs& R, std::string_view coeff);

/// Maps an error kind to the CLI exit code.
int exit_code(ErrorKind k);

using Json = nlohmann::ordered_json;

inline constexpr int kJsonVersion = 1;

Json to_json(const Signature& sig, const Morphism& m);
Json to_json(const Signature& sig, const Cell& c);
Json chains_json(const Signature& sig, const std::vector<std::vector<Cell>>& chains);
Json to_json(const HomologyGroup& h);
Json to_json(const IntMatrix& m);
Json homology_json(const TensoredComplex& tc, const std::vector<HomologyGroup>& groups, std::uint64_t degree);

}  // namespace lawvere
