#include "lawvere/morse.hpp"

#include "lawvere/unify.hpp"

namespace lawvere {

std::string_view to_string(CellKind k) {
  switch (k) {
    case CellKind::Critical: return "critical";
    case CellKind::Redundant: return "redundant";
    case CellKind::Collapsible: return "collapsible";
  }
  return "?";
}

namespace {

bool valid_entry(const Morphism& m, const Trs& R) {
  return is_essential(m) && !is_partial_permutation(m) && is_irreducible(m, R);
}

}  // namespace

std::optional<Cell> redundant_partner(const Cell& c, const Trs& R) {
  const std::size_t n = c.dim();
  if (n == 0) return std::nullopt;
  const std::size_t L = chain_prefix_length(c, R);
  if (L > n) return std::nullopt;

  if (L == 1) {
    const Morphism& t1 = c.entries[0];
    const Term& head = t1.terms[0];
    if (head.is_var() || is_generator(t1)) return std::nullopt;
    const OpDecl& d = R.sig.op(head.op());
    std::vector<Term> vars;
    for (std::size_t i = 0; i < d.args.size(); ++i) vars.push_back(Term::var(static_cast<int>(i), d.args[i]));
    Morphism f{d.args, {Term::app(head.op(), d.result, std::move(vars))}};
    Morphism args{t1.context, head.args()};
    if (!valid_entry(args, R)) return std::nullopt;
    Cell partner;
    partner.entries.push_back(std::move(f));
    partner.entries.push_back(std::move(args));
    partner.entries.insert(partner.entries.end(), c.entries.begin() + 1, c.entries.end());
    return partner;
  }

  const Term t = raw_composite(c, L - 1);
  const Morphism& tL = c.entries[L - 1];
  const RedexIndex top = pmax(compose_term(t, tL), R);
  if (top.minus_infinity) return std::nullopt;
  const Term* sub = nullptr;
  try {
    sub = &subterm_at(t, top.position);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (sub->is_var()) return std::nullopt;
  const Rule& rule = R.rules[top.rank];
  auto uni = mgu(*sub, c.entries[L - 2].context, rule.lhs, rule.context);
  if (!uni) return std::nullopt;
  Morphism u = canonicalize(uni->left.context, uni->left.terms).first;
  if (!valid_entry(u, R)) return std::nullopt;
  auto w = factor_through(u, tL);
  if (!w || !valid_entry(*w, R)) return std::nullopt;

  Cell partner;
  partner.entries.assign(c.entries.begin(), c.entries.begin() + static_cast<std::ptrdiff_t>(L - 1));
  partner.entries.push_back(std::move(u));
  partner.entries.push_back(std::move(*w));
  partner.entries.insert(partner.entries.end(), c.entries.begin() + static_cast<std::ptrdiff_t>(L), c.entries.end());
  return partner;
}

std::vector<std::pair<std::size_t, Cell>> collapsible_partners(const Cell& c, const Trs& R, Normalizer&) {
  std::vector<std::pair<std::size_t, Cell>> out;
  const std::size_t n = c.dim();
  for (std::size_t j = 1; j < n; ++j) {
    Morphism merged = compose_raw(c.entries[j - 1], c.entries[j]);
    if (!valid_entry(merged, R)) continue;
    Cell m;
    m.entries.assign(c.entries.begin(), c.entries.begin() + static_cast<std::ptrdiff_t>(j - 1));
    m.entries.push_back(std::move(merged));
    m.entries.insert(m.entries.end(), c.entries.begin() + static_cast<std::ptrdiff_t>(j + 1), c.entries.end());
    if (is_chain(m, R)) continue;
    auto p = redundant_partner(m, R);
    if (p && *p == c) out.emplace_back(j, std::move(m));
  }
  return out;
}

}  // namespace lawvere
