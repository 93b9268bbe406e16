#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lawvere/homology.hpp"

namespace lawvere::monoid {

using Word = std::vector<int>;

struct StringRule {
  std::string name;
  Word lhs;
  Word rhs;
};

/// String rewriting system; rule order is the order of `rules`.
struct Srs {
  std::vector<std::string> letters;
  std::vector<StringRule> rules;
  std::size_t step_budget = 10000;
};

void validate(const Srs& R);

std::optional<std::size_t> find_redex(const Word& w, const Srs& R, std::size_t* rule = nullptr);
bool is_irreducible(const Word& w, const Srs& R);
Word normal_form(const Word& w, const Srs& R);

struct SrsReport {
  bool reduced = true;
  bool locally_confluent = true;
  bool termination_ok = true;
  std::size_t critical_pairs = 0;
  std::vector<std::string> issues;
  std::optional<std::string> budget_failure;

  bool certified() const { return reduced && locally_confluent && termination_ok && !budget_failure; }
};

SrsReport check_complete(const Srs& R);
void require_certified(const Srs& R);

using WordCell = std::vector<Word>;

std::vector<Word> chain_extensions(const WordCell& chain, const Srs& R);
bool is_chain(const WordCell& c, const Srs& R);
/// Largest i < n with (u1..ui) a chain; n when the cell is a chain.
std::size_t chain_prefix_length(const WordCell& c, const Srs& R);

std::vector<std::vector<WordCell>> enumerate_chains(const Srs& R, std::size_t max_dim, bool certify = true);

/// Element of the monoid ring: normal-form word -> multiplicity.
using RingElement = std::map<Word, std::int64_t>;

enum class WordCellKind { Critical, Redundant, Collapsible };

struct WordCellClass {
  WordCellKind kind = WordCellKind::Critical;
  WordCell partner;
  int epsilon = 0;
};

/// Normalized bar complex of the monoid with the Anick matching.
class MonoidComplex {
 public:
  explicit MonoidComplex(const Srs& R, std::size_t path_budget = 1000000) : R_(&R), budget_(path_budget) {}

  using Boundary = std::vector<std::pair<WordCell, RingElement>>;

  const Boundary& boundary(const WordCell& c);
  const WordCellClass& classify(const WordCell& c);
  Boundary differential(const WordCell& chain);

  RingElement multiply(const RingElement& a, const RingElement& b) const;

 private:
  const Srs* R_;
  std::size_t budget_;
  std::map<WordCell, Boundary> boundaries_;
  std::map<WordCell, WordCellClass> classes_;
};

/// Matrices of Z ⊗ F (every monoid element counts 1), with integer entries.
TensoredComplex tensor_trivial(MonoidComplex& mc, const std::vector<std::vector<WordCell>>& chains);

std::string word_string(const Srs& R, const Word& w);
std::string to_string(const Srs& R, const WordCell& c);

}  // namespace lawvere::monoid
