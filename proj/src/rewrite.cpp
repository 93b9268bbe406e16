#include "lawvere/rewrite.hpp"

#include <algorithm>
#include <numeric>

#include "lawvere/error.hpp"
#include "lawvere/unify.hpp"

namespace lawvere {

void validate(const Trs& R) {
  for (const Rule& r : R.rules) {
    if (!r.lhs.valid() || !r.rhs.valid()) throw Error(ErrorKind::InputError, "rule '" + r.name + "' is incomplete");
    if (r.lhs.is_var()) throw Error(ErrorKind::VariableOnLhsRoot, "rule '" + r.name + "' has a variable lhs");
    if (r.lhs.sort() != r.rhs.sort())
      throw Error(ErrorKind::SortError, "rule '" + r.name + "' relates terms of different sorts");
    std::vector<int> lv, rv;
    std::vector<char> ls, rs;
    collect_vars(r.lhs, lv, ls);
    collect_vars(r.rhs, rv, rs);
    for (int v : rv)
      if (std::find(lv.begin(), lv.end(), v) == lv.end())
        throw Error(ErrorKind::RhsVariableNotInLhs, "rule '" + r.name + "' introduces a variable on the rhs");
  }
}

namespace {

void steps_rec(const Term& t, const Term& whole, Position& cur, const Trs& R, std::vector<RewriteStep>& out) {
  if (t.is_var()) return;
  for (std::size_t k = 0; k < R.rules.size(); ++k) {
    const Rule& r = R.rules[k];
    if (r.lhs.op() != t.op()) continue;
    Substitution sigma;
    if (match_into(r.lhs, t, sigma)) out.push_back({k, cur, replace_at(whole, cur, substitute(r.rhs, sigma))});
  }
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    cur.push_back(static_cast<int>(i + 1));
    steps_rec(t.args()[i], whole, cur, R, out);
    cur.pop_back();
  }
}

bool has_root_redex(const Term& t, const Trs& R) {
  for (const Rule& r : R.rules) {
    if (r.lhs.op() != t.op()) continue;
    Substitution sigma;
    if (match_into(r.lhs, t, sigma)) return true;
  }
  return false;
}

}  // namespace

std::vector<RewriteStep> rewrite_steps(const Term& t, const Trs& R) {
  std::vector<RewriteStep> out;
  Position cur;
  steps_rec(t, t, cur, R, out);
  return out;
}

bool is_irreducible(const Term& t, const Trs& R) {
  if (t.is_var()) return true;
  for (const Term& a : t.args())
    if (!is_irreducible(a, R)) return false;
  return !has_root_redex(t, R);
}

bool is_irreducible(const Morphism& m, const Trs& R) {
  return std::all_of(m.terms.begin(), m.terms.end(), [&](const Term& t) { return is_irreducible(t, R); });
}

Normalizer::Normalizer(const Trs& R, std::size_t step_budget) : R_(&R), budget_(step_budget) {}

Term Normalizer::normalize(const Term& t) {
  steps_ = 0;
  return nf(t);
}

Morphism Normalizer::normalize(const Morphism& m) {
  Morphism out;
  out.context = m.context;
  out.terms.reserve(m.terms.size());
  for (const Term& t : m.terms) out.terms.push_back(normalize(t));
  return out;
}

Term Normalizer::nf(const Term& t) {
  if (t.is_var()) return t;
  if (auto it = cache_.find(t); it != cache_.end()) return it->second;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(nf(a));
    changed = changed || !(args.back() == a);
  }
  Term u = changed ? Term::app(t.op(), t.sort(), std::move(args)) : t;
  Term result = u;
  for (const Rule& r : R_->rules) {
    if (r.lhs.op() != u.op()) continue;
    Substitution sigma;
    if (!match_into(r.lhs, u, sigma)) continue;
    if (++steps_ > budget_)
      throw Error(ErrorKind::BudgetExceeded, "normalization exceeded " + std::to_string(budget_) + " rewrite steps on " +
                                                 to_string(R_->sig, t));
    result = nf(substitute(r.rhs, sigma));
    break;
  }
  cache_.emplace(t, result);
  return result;
}

Term normal_form(const Term& t, const Trs& R) { return Normalizer(R).normalize(t); }

Term normal_form(const Term& t, const Trs& R, std::size_t step_budget) {
  return Normalizer(R, step_budget).normalize(t);
}

std::vector<CriticalPair> critical_pairs(const Trs& R) {
  std::vector<CriticalPair> out;
  for (std::size_t i = 0; i < R.rules.size(); ++i) {
    const Rule& outer = R.rules[i];
    for (const Position& p : positions(outer.lhs)) {
      const Term& sub = subterm_at(outer.lhs, p);
      if (sub.is_var()) continue;
      for (std::size_t j = 0; j < R.rules.size(); ++j) {
        if (i == j && p.empty()) continue;
        const Rule& inner = R.rules[j];
        auto u = mgu(sub, outer.context, inner.lhs, inner.context);
        if (!u) continue;
        CriticalPair cp;
        cp.outer = i;
        cp.inner = j;
        cp.position = p;
        cp.context = u->left.context;
        cp.peak = substitute(outer.lhs, std::span<const Term>(u->left.terms));
        cp.left = substitute(outer.rhs, std::span<const Term>(u->left.terms));
        cp.right = replace_at(cp.peak, p, substitute(inner.rhs, std::span<const Term>(u->right.terms)));
        out.push_back(std::move(cp));
      }
    }
  }
  return out;
}

Term random_term(const Signature& sig, SortId sort, int depth, const std::vector<SortId>& context,
                 std::mt19937_64& rng) {
  std::vector<int> vars;
  for (std::size_t i = 0; i < context.size(); ++i)
    if (context[i] == sort) vars.push_back(static_cast<int>(i));
  std::vector<OpId> ops, constants;
  for (std::size_t f = 0; f < sig.num_ops(); ++f) {
    const OpDecl& d = sig.op(static_cast<OpId>(f));
    if (d.result != sort) continue;
    ops.push_back(static_cast<OpId>(f));
    if (d.args.empty()) constants.push_back(static_cast<OpId>(f));
  }
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  const bool leaf = depth <= 0 || ops.empty() || std::uniform_int_distribution<int>(0, 3)(rng) == 0;
  if (leaf && (!vars.empty() || !constants.empty())) {
    std::size_t k = pick(vars.size() + constants.size());
    if (k < vars.size()) return Term::var(vars[k], sort);
    return Term::app(constants[k - vars.size()], sort, {});
  }
  if (ops.empty() || depth < -8)
    throw Error(ErrorKind::SortError, "sort " + sig.sort_name(sort) + " has no terms to sample");
  OpId f = ops[pick(ops.size())];
  std::vector<Term> args;
  for (SortId s : sig.op(f).args) args.push_back(random_term(sig, s, depth - 1, context, rng));
  return Term::app(f, sort, std::move(args));
}

CompletenessReport check_complete(const Trs& R, const CheckOptions& opt) {
  CompletenessReport rep;
  const Signature& sig = R.sig;

  for (std::size_t k = 0; k < R.rules.size(); ++k) {
    const Rule& r = R.rules[k];
    Trs others{sig, {}, R.budgets};
    for (std::size_t j = 0; j < R.rules.size(); ++j)
      if (j != k) others.rules.push_back(R.rules[j]);
    if (!is_irreducible(r.lhs, others)) {
      rep.reduced = false;
      rep.reducedness_issues.push_back("lhs of " + r.name + " is reducible by another rule");
    }
    if (!is_irreducible(r.rhs, R)) {
      rep.reduced = false;
      rep.reducedness_issues.push_back("rhs of " + r.name + " is reducible");
    }
  }

  rep.termination_assumed = opt.assume_terminating;
  if (!opt.assume_terminating) {
    Normalizer probe(R, opt.term_budget);
    std::vector<Term> sample;
    for (const Rule& r : R.rules) sample.push_back(r.rhs);
    std::vector<SortId> ctx;
    for (std::size_t s = 0; s < sig.num_sorts(); ++s) {
      ctx.push_back(static_cast<SortId>(s));
      ctx.push_back(static_cast<SortId>(s));
    }
    std::mt19937_64 rng(opt.seed);
    if (sig.num_sorts() > 0)
      for (std::size_t i = 0; i < opt.probe_samples; ++i) {
        auto s = static_cast<SortId>(i % sig.num_sorts());
        try {
          sample.push_back(random_term(sig, s, opt.probe_depth, ctx, rng));
        } catch (const Error&) {
        }
      }
    for (const Term& t : sample) {
      try {
        ++rep.probed_terms;
        probe.normalize(t);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        rep.termination_ok = false;
        rep.budget_failure = "termination probe: " + std::string(e.what());
        return rep;
      }
    }
  }

  auto pairs = critical_pairs(R);
  rep.critical_pairs = pairs.size();
  Normalizer nf(R, opt.cp_budget);
  for (const CriticalPair& cp : pairs) {
    try {
      Term a = nf.normalize(cp.left);
      Term b = nf.normalize(cp.right);
      if (!(a == b)) {
        rep.locally_confluent = false;
        rep.unjoinable.push_back(R.rules[cp.outer].name + "/" + R.rules[cp.inner].name + " at " +
                                 position_string(cp.position) + ": " + to_string(sig, a) + " vs " + to_string(sig, b));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      rep.budget_failure = "critical pair " + R.rules[cp.outer].name + "/" + R.rules[cp.inner].name + " at " +
                           position_string(cp.position) + " on " + to_string(sig, cp.peak) + ": " + e.what();
      return rep;
    }
  }
  return rep;
}

void require_certified(const Trs& R, const CheckOptions& opt) {
  CompletenessReport rep = check_complete(R, opt);
  if (rep.budget_failure) throw Error(ErrorKind::BudgetExceeded, *rep.budget_failure);
  if (!rep.certified()) {
    std::string why;
    if (!rep.reduced) why += " not reduced (run `reduce` first);";
    if (!rep.locally_confluent) why += " not locally confluent;";
    if (!rep.termination_ok) why += " termination probe failed;";
    throw Error(ErrorKind::CompletenessNotCertified, "rewriting system is" + why);
  }
}

Trs reduce_trs(const Trs& R) {
  Normalizer nf(R);
  Trs mid{R.sig, {}, R.budgets};
  for (const Rule& r : R.rules) {
    bool dup = std::any_of(mid.rules.begin(), mid.rules.end(), [&](const Rule& q) { return q.lhs == r.lhs; });
    if (dup) continue;
    Rule q = r;
    q.rhs = nf.normalize(r.rhs);
    mid.rules.push_back(std::move(q));
  }
  Trs out{R.sig, {}, R.budgets};
  for (std::size_t k = 0; k < mid.rules.size(); ++k) {
    Trs others{R.sig, {}, R.budgets};
    for (std::size_t j = 0; j < mid.rules.size(); ++j)
      if (j != k) others.rules.push_back(mid.rules[j]);
    if (is_irreducible(mid.rules[k].lhs, others)) out.rules.push_back(mid.rules[k]);
  }
  return out;
}

std::uint64_t degree(const Trs& R) {
  std::uint64_t g = 0;
  for (const Rule& r : R.rules) {
    std::vector<int> vars;
    std::vector<char> seen;
    collect_vars(r.lhs, vars, seen);
    for (int v : vars) {
      auto a = static_cast<std::int64_t>(var_count(r.lhs, v));
      auto b = static_cast<std::int64_t>(var_count(r.rhs, v));
      g = std::gcd(g, static_cast<std::uint64_t>(a > b ? a - b : b - a));
    }
  }
  return g;
}

std::string to_string(const Signature& sig, const Rule& r) {
  return r.name + " : " + to_string(sig, r.lhs) + " -> " + to_string(sig, r.rhs);
}

}  // namespace lawvere
