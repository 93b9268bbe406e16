#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lawvere/morphism.hpp"
#include "lawvere/term.hpp"

namespace lawvere {

/// Syntactic matching, nonlinear patterns allowed.  Pattern and subject variables
/// live in separate namespaces.
std::optional<Substitution> match_term(const Term& pattern, const Term& subject);

/// Extends `sigma` so that pattern·sigma == subject; false leaves sigma unspecified.
bool match_into(const Term& pattern, const Term& subject, Substitution& sigma);

/// Finds w over m's context with u∘w == m (syntactically).  u must be essential.
std::optional<Morphism> factor_through(const Morphism& u, const Morphism& m);

/// Most general unifier of t (over ctx_t) and s (over ctx_s), contexts renamed apart.
/// `left` assigns a term to every variable of ctx_t, `right` to every variable of
/// ctx_s; both share the context of the joint tuple left ++ right, which is essential.
/// Context variables that occur in neither term come out as distinct fresh variables.
struct Unifier {
  Morphism left;
  Morphism right;
  Term unified;
};

std::optional<Unifier> mgu(const Term& t, const std::vector<SortId>& ctx_t, const Term& s,
                           const std::vector<SortId>& ctx_s);

/// Smallest context covering the variables of t; unused slots get sort 0.
std::vector<SortId> infer_context(const Term& t);
std::optional<Unifier> mgu(const Term& t, const Term& s);

/// All (p, sigma) with pattern·sigma == t|_p, positions in preorder.
std::vector<std::pair<Position, Substitution>> generalized_subterm_occurrences(const Term& pattern, const Term& t);

}  // namespace lawvere
