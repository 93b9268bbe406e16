#include "lawvere/morphism.hpp"

#include <algorithm>

#include "lawvere/error.hpp"

namespace lawvere {

std::vector<SortId> Morphism::codomain() const {
  std::vector<SortId> out;
  out.reserve(terms.size());
  for (const Term& t : terms) out.push_back(t.sort());
  return out;
}

std::strong_ordering operator<=>(const Morphism& a, const Morphism& b) {
  if (auto c = a.context <=> b.context; c != 0) return c;
  return std::lexicographical_compare_three_way(a.terms.begin(), a.terms.end(), b.terms.begin(), b.terms.end());
}

bool PartialPermutation::is_identity() const {
  if (selection.size() != source.size()) return false;
  for (std::size_t i = 0; i < selection.size(); ++i)
    if (selection[i] != static_cast<int>(i)) return false;
  return true;
}

Morphism PartialPermutation::as_morphism() const {
  Morphism m;
  m.context = source;
  for (int i : selection) m.terms.push_back(Term::var(i, source.at(static_cast<std::size_t>(i))));
  return m;
}

Morphism identity(const std::vector<SortId>& sorts) {
  Morphism m;
  m.context = sorts;
  for (std::size_t i = 0; i < sorts.size(); ++i) m.terms.push_back(Term::var(static_cast<int>(i), sorts[i]));
  return m;
}

Morphism compose_raw(const Morphism& f, const Morphism& g) {
  if (f.context.size() != g.terms.size())
    throw Error(ErrorKind::ArityMismatch, "composite needs " + std::to_string(f.context.size()) +
                                              " components, got " + std::to_string(g.terms.size()));
  for (std::size_t i = 0; i < g.terms.size(); ++i)
    if (g.terms[i].sort() != f.context[i])
      throw Error(ErrorKind::SortMismatch, "component " + std::to_string(i + 1) + " of the composite has the wrong sort");
  Morphism out;
  out.context = g.context;
  out.terms.reserve(f.terms.size());
  for (const Term& t : f.terms) out.terms.push_back(substitute(t, std::span<const Term>(g.terms)));
  return out;
}

Term compose_term(const Term& t, const Morphism& g) { return substitute(t, std::span<const Term>(g.terms)); }

std::pair<Morphism, PartialPermutation> canonicalize(const std::vector<SortId>& context,
                                                     const std::vector<Term>& terms) {
  std::vector<int> order;
  std::vector<char> seen(context.size(), 0);
  for (const Term& t : terms) collect_vars(t, order, seen);

  std::vector<Term> image(seen.size());
  Morphism ess;
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto v = static_cast<std::size_t>(order[k]);
    if (v >= context.size()) throw Error(ErrorKind::UnboundVariable, "variable outside the context");
    image[v] = Term::var(static_cast<int>(k), context[v]);
    ess.context.push_back(context[v]);
  }
  ess.terms.reserve(terms.size());
  for (const Term& t : terms) ess.terms.push_back(substitute(t, std::span<const Term>(image)));
  return {std::move(ess), PartialPermutation{context, std::move(order)}};
}

bool is_essential(const Morphism& m) {
  std::vector<int> order;
  std::vector<char> seen(m.context.size(), 0);
  for (const Term& t : m.terms) collect_vars(t, order, seen);
  if (order.size() != m.context.size()) return false;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_partial_permutation(const Morphism& m) {
  std::vector<char> seen(m.context.size(), 0);
  for (const Term& t : m.terms) {
    if (!t.is_var()) return false;
    auto i = static_cast<std::size_t>(t.var_index());
    if (seen[i]) return false;
    seen[i] = 1;
  }
  return true;
}

bool is_identity(const Morphism& m) {
  if (m.terms.size() != m.context.size()) return false;
  for (std::size_t i = 0; i < m.terms.size(); ++i)
    if (!m.terms[i].is_var() || m.terms[i].var_index() != static_cast<int>(i)) return false;
  return true;
}

Morphism component(const Morphism& m, std::size_t i) { return Morphism{m.context, {m.terms.at(i)}}; }

Morphism select(const PartialPermutation& pi, const Morphism& m) {
  Morphism out;
  out.context = m.context;
  for (int i : pi.selection) out.terms.push_back(m.terms.at(static_cast<std::size_t>(i)));
  return out;
}

std::string to_string(const Signature& sig, const Morphism& m) {
  std::string s = "<";
  for (std::size_t i = 0; i < m.terms.size(); ++i) {
    if (i) s += ',';
    s += to_string(sig, m.terms[i]);
  }
  return s + ">";
}

}  // namespace lawvere
