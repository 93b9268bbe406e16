#include "lawvere/unify.hpp"

#include "lawvere/error.hpp"

namespace lawvere {

bool match_into(const Term& pattern, const Term& subject, Substitution& sigma) {
  if (pattern.sort() != subject.sort()) return false;
  if (pattern.is_var()) {
    auto [it, inserted] = sigma.try_emplace(pattern.var_index(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_var() || pattern.op() != subject.op()) return false;
  if (pattern.num_ops() == pattern.size()) return pattern == subject;
  const auto& pa = pattern.args();
  const auto& sa = subject.args();
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (!match_into(pa[i], sa[i], sigma)) return false;
  return true;
}

std::optional<Substitution> match_term(const Term& pattern, const Term& subject) {
  Substitution sigma;
  if (!match_into(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Morphism> factor_through(const Morphism& u, const Morphism& m) {
  if (u.terms.size() != m.terms.size()) return std::nullopt;
  Substitution sigma;
  for (std::size_t i = 0; i < u.terms.size(); ++i)
    if (!match_into(u.terms[i], m.terms[i], sigma)) return std::nullopt;
  Morphism w;
  w.context = m.context;
  for (std::size_t i = 0; i < u.context.size(); ++i) {
    auto it = sigma.find(static_cast<int>(i));
    if (it == sigma.end()) return std::nullopt;
    w.terms.push_back(it->second);
  }
  return w;
}

namespace {

class Unification {
 public:
  explicit Unification(std::size_t n) : binding_(n) {}

  bool unify(const Term& a0, const Term& b0) {
    Term a = walk(a0);
    Term b = walk(b0);
    if (a.sort() != b.sort()) return false;
    if (a.is_var() && b.is_var() && a.var_index() == b.var_index()) return true;
    if (a.is_var()) return bind(a.var_index(), b);
    if (b.is_var()) return bind(b.var_index(), a);
    if (a.op() != b.op()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
      if (!unify(a.args()[i], b.args()[i])) return false;
    return true;
  }

  Term resolve(const Term& t) {
    Term w = walk(t);
    if (w.is_var() || w.num_ops() == w.size()) return w;
    std::vector<Term> args;
    args.reserve(w.args().size());
    for (const Term& a : w.args()) args.push_back(resolve(a));
    return Term::app(w.op(), w.sort(), std::move(args));
  }

 private:
  Term walk(Term t) const {
    while (t.is_var()) {
      const auto& b = binding_[static_cast<std::size_t>(t.var_index())];
      if (!b) break;
      t = *b;
    }
    return t;
  }

  bool occurs(int v, const Term& t) const {
    Term w = walk(t);
    if (w.is_var()) return w.var_index() == v;
    for (const Term& a : w.args())
      if (occurs(v, a)) return true;
    return false;
  }

  bool bind(int v, const Term& t) {
    if (occurs(v, t)) return false;
    binding_[static_cast<std::size_t>(v)] = t;
    return true;
  }

  std::vector<std::optional<Term>> binding_;
};

}  // namespace

std::optional<Unifier> mgu(const Term& t, const std::vector<SortId>& ctx_t, const Term& s,
                           const std::vector<SortId>& ctx_s) {
  if (t.sort() != s.sort()) return std::nullopt;
  const int offset = static_cast<int>(ctx_t.size());
  Term s2 = shift_vars(s, offset);
  Unification u(ctx_t.size() + ctx_s.size());
  if (!u.unify(t, s2)) return std::nullopt;

  std::vector<SortId> joint = ctx_t;
  joint.insert(joint.end(), ctx_s.begin(), ctx_s.end());
  std::vector<Term> tuple;
  tuple.reserve(joint.size());
  for (std::size_t i = 0; i < joint.size(); ++i) tuple.push_back(u.resolve(Term::var(static_cast<int>(i), joint[i])));

  auto [ess, pi] = canonicalize(joint, tuple);
  Unifier out;
  out.left.context = ess.context;
  out.right.context = ess.context;
  out.left.terms.assign(ess.terms.begin(), ess.terms.begin() + offset);
  out.right.terms.assign(ess.terms.begin() + offset, ess.terms.end());
  out.unified = substitute(t, std::span<const Term>(out.left.terms));
  return out;
}

namespace {

void fill_context(const Term& t, std::vector<SortId>& ctx) {
  if (t.is_var()) {
    auto i = static_cast<std::size_t>(t.var_index());
    if (i >= ctx.size()) ctx.resize(i + 1, 0);
    ctx[i] = t.sort();
    return;
  }
  for (const Term& a : t.args()) fill_context(a, ctx);
}

void scan(const Term& pattern, const Term& t, Position& cur, std::vector<std::pair<Position, Substitution>>& out) {
  if (auto m = match_term(pattern, t)) out.emplace_back(cur, std::move(*m));
  if (t.is_var()) return;
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    cur.push_back(static_cast<int>(i + 1));
    scan(pattern, t.args()[i], cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SortId> infer_context(const Term& t) {
  std::vector<SortId> ctx;
  fill_context(t, ctx);
  return ctx;
}

std::optional<Unifier> mgu(const Term& t, const Term& s) { return mgu(t, infer_context(t), s, infer_context(s)); }

std::vector<std::pair<Position, Substitution>> generalized_subterm_occurrences(const Term& pattern, const Term& t) {
  std::vector<std::pair<Position, Substitution>> out;
  Position cur;
  scan(pattern, t, cur, out);
  return out;
}

}  // namespace lawvere
