#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "lawvere/term.hpp"

namespace lawvere {

/// A morphism of the syntactic category: a context of sorts and a tuple of terms
/// whose variables index into that context.
struct Morphism {
  std::vector<SortId> context;
  std::vector<Term> terms;

  std::size_t arity() const { return terms.size(); }
  std::vector<SortId> codomain() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend std::strong_ordering operator<=>(const Morphism& a, const Morphism& b);
};

/// Injection from target indices into source indices.  As a morphism it is
/// (source | x_{selection[0]}, ..., x_{selection[m-1]}).
struct PartialPermutation {
  std::vector<SortId> source;
  std::vector<int> selection;

  bool is_identity() const;
  bool is_permutation() const { return selection.size() == source.size(); }
  Morphism as_morphism() const;

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
};

Morphism identity(const std::vector<SortId>& sorts);

/// Substitutes g's terms for f's context variables.  No rewriting.
Morphism compose_raw(const Morphism& f, const Morphism& g);

/// Composite of a single term over `context` with g.
Term compose_term(const Term& t, const Morphism& g);

/// Splits a tuple over `context` into its essential part (used variables renamed
/// x1, x2, ... by first occurrence) and the partial permutation that selects them.
std::pair<Morphism, PartialPermutation> canonicalize(const std::vector<SortId>& context,
                                                     const std::vector<Term>& terms);

bool is_essential(const Morphism& m);
bool is_partial_permutation(const Morphism& m);
bool is_identity(const Morphism& m);

/// Component i as a single-term morphism over the same context.
Morphism component(const Morphism& m, std::size_t i);

/// Picks components of `m` as listed by the selection of a partial permutation.
Morphism select(const PartialPermutation& pi, const Morphism& m);

std::string to_string(const Signature& sig, const Morphism& m);

}  // namespace lawvere
