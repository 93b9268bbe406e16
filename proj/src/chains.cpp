#include "lawvere/chains.hpp"

#include <algorithm>

#include "lawvere/error.hpp"
#include "lawvere/unify.hpp"

namespace lawvere {

std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
  if (auto c = a.entries.size() <=> b.entries.size(); c != 0) return c;
  if (auto c = a.sort <=> b.sort; c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries.begin(), a.entries.end(), b.entries.begin(),
                                                b.entries.end());
}

std::strong_ordering operator<=>(const RedexIndex& a, const RedexIndex& b) {
  if (a.minus_infinity || b.minus_infinity) return (!a.minus_infinity) <=> (!b.minus_infinity);
  if (auto c = a.position <=> b.position; c != 0) return c;
  return a.rank <=> b.rank;
}

std::string to_string(const Trs& R, const RedexIndex& r) {
  if (r.minus_infinity) return "-inf";
  return "(" + position_string(r.position) + "," + R.rules.at(r.rank).name + ")";
}

namespace {

void redexes(const Term& t, Position& cur, const Trs& R, std::vector<RedexIndex>& out) {
  if (t.is_var()) return;
  for (std::size_t k = 0; k < R.rules.size(); ++k) {
    if (R.rules[k].lhs.op() != t.op()) continue;
    Substitution sigma;
    if (match_into(R.rules[k].lhs, t, sigma)) out.push_back(RedexIndex::at(cur, k));
  }
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    cur.push_back(static_cast<int>(i + 1));
    redexes(t.args()[i], cur, R, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<RedexIndex> redex_set(const Term& t, const Trs& R) {
  std::vector<RedexIndex> out;
  Position cur;
  redexes(t, cur, R, out);
  std::sort(out.begin(), out.end());
  return out;
}

RedexIndex pmax(const Term& t, const Trs& R) {
  auto all = redex_set(t, R);
  if (all.empty()) return RedexIndex{};
  return all.back();
}

bool is_generator(const Morphism& t) {
  if (t.terms.size() != 1 || t.terms[0].is_var()) return false;
  const Term& f = t.terms[0];
  if (f.args().size() != t.context.size()) return false;
  for (std::size_t i = 0; i < f.args().size(); ++i)
    if (!f.args()[i].is_var() || f.args()[i].var_index() != static_cast<int>(i)) return false;
  return true;
}

Term raw_composite(const Cell& c, std::size_t upto) {
  Term t = c.entries.at(0).terms.at(0);
  for (std::size_t i = 1; i < upto; ++i) t = compose_term(t, c.entries[i]);
  return t;
}

namespace {

// First component of the mgu of (T|_p, l), canonicalized.
std::optional<Morphism> unifier_entry(const Term& T, const std::vector<SortId>& ctx, const Position& p,
                                      const Rule& rule) {
  auto u = mgu(subterm_at(T, p), ctx, rule.lhs, rule.context);
  if (!u) return std::nullopt;
  return canonicalize(u->left.context, u->left.terms).first;
}

}  // namespace

std::vector<Morphism> chain_extensions(const Cell& chain, const Trs& R) {
  std::vector<Morphism> out;
  if (chain.dim() == 0) return out;
  const Term T = raw_composite(chain, chain.dim());
  const std::vector<SortId>& ctx = chain.entries.back().context;
  const RedexIndex base = pmax(T, R);
  for (const Position& p : positions(T)) {
    if (subterm_at(T, p).is_var()) continue;
    for (std::size_t k = 0; k < R.rules.size(); ++k) {
      RedexIndex cand = RedexIndex::at(p, k);
      if (!(base < cand)) continue;
      auto u = unifier_entry(T, ctx, p, R.rules[k]);
      if (!u || is_partial_permutation(*u) || !is_irreducible(*u, R)) continue;
      if (pmax(compose_term(T, *u), R) != cand) continue;
      if (std::find(out.begin(), out.end(), *u) == out.end()) out.push_back(std::move(*u));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Whether (t1, ..., t_k) is a chain, given that (t1, ..., t_{k-1}) is one.
bool extends_chain(const Cell& c, std::size_t k, const Trs& R) {
  if (k == 1) return is_generator(c.entries[0]);
  const Term T = raw_composite(c, k - 1);
  const std::vector<SortId>& ctx = c.entries[k - 2].context;
  const Morphism& u = c.entries[k - 1];
  RedexIndex top = pmax(compose_term(T, u), R);
  if (top.minus_infinity || !(pmax(T, R) < top)) return false;
  if (subterm_at(T, top.position).is_var()) return false;
  auto e = unifier_entry(T, ctx, top.position, R.rules[top.rank]);
  return e && *e == u;
}

}  // namespace

std::size_t chain_prefix_length(const Cell& c, const Trs& R) {
  std::size_t L = 1;
  while (L <= c.dim() && extends_chain(c, L, R)) ++L;
  return L;
}

bool is_chain(const Cell& c, const Trs& R) { return chain_prefix_length(c, R) == c.dim() + 1; }

bool is_normalized_cell(const Cell& c, const Trs& R) {
  if (c.dim() == 0) return c.sort >= 0;
  if (c.entries[0].terms.size() != 1) return false;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Morphism& e = c.entries[i];
    if (!is_essential(e) || is_partial_permutation(e) || !is_irreducible(e, R)) return false;
    if (i > 0 && c.entries[i - 1].context != e.codomain()) return false;
  }
  return true;
}

std::vector<std::vector<Cell>> enumerate_chains(const Trs& R, std::size_t max_dim, bool certify) {
  if (certify) require_certified(R);
  std::vector<std::vector<Cell>> out(max_dim + 1);
  for (std::size_t s = 0; s < R.sig.num_sorts(); ++s) out[0].push_back(Cell::zero(static_cast<SortId>(s)));
  if (max_dim == 0) return out;
  for (std::size_t f = 0; f < R.sig.num_ops(); ++f) {
    const OpDecl& d = R.sig.op(static_cast<OpId>(f));
    std::vector<Term> args;
    for (std::size_t i = 0; i < d.args.size(); ++i) args.push_back(Term::var(static_cast<int>(i), d.args[i]));
    Cell c;
    c.entries.push_back(Morphism{d.args, {Term::app(static_cast<OpId>(f), d.result, std::move(args))}});
    out[1].push_back(std::move(c));
  }
  std::sort(out[1].begin(), out[1].end());
  for (std::size_t n = 2; n <= max_dim; ++n) {
    for (const Cell& prev : out[n - 1]) {
      for (Morphism& u : chain_extensions(prev, R)) {
        Cell c = prev;
        c.entries.push_back(std::move(u));
        out[n].push_back(std::move(c));
      }
    }
    std::sort(out[n].begin(), out[n].end());
  }
  return out;
}

Morphism cell_object(const Cell& c, Normalizer& nf) {
  if (c.dim() == 0) return identity({c.sort});
  Morphism m = c.entries[0];
  for (std::size_t i = 1; i < c.dim(); ++i) m = compose_raw(m, c.entries[i]);
  return nf.normalize(m);
}

std::string to_string(const Signature& sig, const Cell& c) {
  if (c.dim() == 0) return "()_" + sig.sort_name(c.sort);
  std::string s = "(";
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (i) s += ", ";
    s += i == 0 ? to_string(sig, c.entries[i].terms[0]) : to_string(sig, c.entries[i]);
  }
  return s + ")";
}

}  // namespace lawvere
