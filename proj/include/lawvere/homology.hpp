#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "lawvere/morse.hpp"

namespace lawvere {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix; rows index n-chains, columns (n-1)-chains.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Product A·B, reduced mod d when d > 0.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::uint64_t d);

struct SmithForm {
  std::vector<BigInt> diagonal;  // nonzero invariant factors, each dividing the next
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

bool is_prime(std::uint64_t n);

struct HomologyGroup {
  std::size_t dim = 0;
  std::uint64_t modulus = 0;
  std::size_t chains = 0;
  std::size_t rank = 0;               // free rank (d = 0) or F_p-dimension (d prime)
  std::vector<BigInt> torsion;        // invariant factors > 1, d = 0 only

  /// Minimal number of generators.
  std::size_t s() const { return rank + torsion.size(); }
};

/// Matrices of the complex tensored with Z_d.  matrices[n] is δ_n for n ≥ 1;
/// matrices[0] is the zero map out of C_0.
struct TensoredComplex {
  std::uint64_t modulus = 0;
  std::vector<std::size_t> chain_counts;
  std::vector<IntMatrix> matrices;
};

/// Unsupported unless d is 0 or prime.
void require_supported_modulus(std::uint64_t d);

template <class Ring>
TensoredComplex tensor_zd(MorseComplex<Ring>& mc, const std::vector<std::vector<Cell>>& chains, std::uint64_t d) {
  require_supported_modulus(d);
  TensoredComplex tc;
  tc.modulus = d;
  for (const auto& level : chains) tc.chain_counts.push_back(level.size());
  tc.matrices.emplace_back(chains.empty() ? 0 : chains[0].size(), 0);
  for (std::size_t n = 1; n < chains.size(); ++n) {
    IntMatrix m(chains[n].size(), chains[n - 1].size());
    for (std::size_t i = 0; i < chains[n].size(); ++i) {
      for (const auto& [target, coef] : mc.differential(chains[n][i])) {
        auto it = std::lower_bound(chains[n - 1].begin(), chains[n - 1].end(), target);
        if (it == chains[n - 1].end() || !(*it == target))
          throw Error(ErrorKind::TrichotomyViolation, "differential reaches a non-chain cell");
        std::int64_t v = mc.ring().count(coef);
        if (d > 0) {
          auto dd = static_cast<std::int64_t>(d);
          v = ((v % dd) + dd) % dd;
        }
        m.at(i, static_cast<std::size_t>(it - chains[n - 1].begin())) = v;
      }
    }
    tc.matrices.push_back(std::move(m));
  }
  return tc;
}

/// H_n of the tensored complex; needs matrices up to n+1.
HomologyGroup homology_group(const TensoredComplex& tc, std::size_t n);

struct InequalityReport {
  std::size_t dim = 0;
  std::uint64_t modulus = 0;
  std::vector<std::size_t> critical;  // #Cr_0 .. #Cr_n
  std::size_t s_n = 0;
  std::vector<std::size_t> ranks;     // rank H_0 .. rank H_{n-1}
  bool weak_holds = false;
  std::int64_t strong_lhs = 0;
  std::int64_t strong_rhs = 0;
  bool strong_holds = false;
};

InequalityReport morse_inequalities(const std::vector<HomologyGroup>& groups, const std::vector<std::size_t>& counts,
                                    std::size_t n);

std::string to_string(const HomologyGroup& h);

}  // namespace lawvere
