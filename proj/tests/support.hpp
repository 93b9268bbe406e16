#pragma once

// Fixtures and independent oracles shared by unit and acceptance tests.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lawvere/frontend.hpp"
#include "lawvere/homology.hpp"
#include "lawvere/monoid.hpp"
#include "lawvere/morse.hpp"
#include "lawvere/unify.hpp"

namespace testing_support {

using namespace lawvere;

inline std::string fixture_path(const std::string& name) { return std::string(LAWVERE_FIXTURE_DIR) + "/" + name; }

inline Trs abelian() { return load_presentation(fixture_path("abelian.lwv")); }
inline Trs abelian_reversed() { return load_presentation(fixture_path("abelian_reversed.lwv")); }
inline Trs group() { return load_presentation(fixture_path("group.lwv")); }
inline monoid::Srs z2() { return load_srs(fixture_path("z2.srs")); }

/// Occurrences of variable i, counted by walking the term directly.
inline std::size_t count_occurrences(const Term& t, int i) {
  if (t.is_var()) return t.var_index() == i ? 1 : 0;
  std::size_t n = 0;
  for (const Term& a : t.args()) n += count_occurrences(a, i);
  return n;
}

inline std::int64_t mod(std::int64_t v, std::uint64_t d) {
  if (d == 0) return v;
  auto dd = static_cast<std::int64_t>(d);
  return ((v % dd) + dd) % dd;
}

/// Every term over `ops` (one sort, id 0) with variables 0..nvars-1 and depth ≤ depth.
inline std::vector<Term> all_terms(const Signature& sig, int nvars, int depth) {
  std::vector<Term> out;
  for (int v = 0; v < nvars; ++v) out.push_back(Term::var(v, 0));
  for (std::size_t f = 0; f < sig.num_ops(); ++f)
    if (sig.op(static_cast<OpId>(f)).args.empty()) out.push_back(Term::app(static_cast<OpId>(f), 0, {}));
  for (int d = 1; d <= depth; ++d) {
    std::vector<Term> next = out;
    std::vector<Term> prev = out;
    for (std::size_t f = 0; f < sig.num_ops(); ++f) {
      const OpDecl& o = sig.op(static_cast<OpId>(f));
      if (o.args.empty()) continue;
      std::function<void(std::vector<Term>&)> fill = [&](std::vector<Term>& args) {
        if (args.size() == o.args.size()) {
          Term t = Term::app(static_cast<OpId>(f), 0, args);
          if (std::find(next.begin(), next.end(), t) == next.end()) next.push_back(t);
          return;
        }
        for (const Term& a : prev) {
          args.push_back(a);
          fill(args);
          args.pop_back();
        }
      };
      std::vector<Term> args;
      fill(args);
    }
    out = std::move(next);
  }
  return out;
}

/// Checks the mgu of (t over nt vars, s over ns vars) against every substitution with
/// images drawn from `range`.  Returns an empty string on agreement.
inline std::string check_mgu_brute_force(const Signature& sig, const Term& t, int nt, const Term& s, int ns,
                                         const std::vector<Term>& range) {
  std::vector<SortId> ct(static_cast<std::size_t>(nt), 0), cs(static_cast<std::size_t>(ns), 0);
  auto u = mgu(t, ct, s, cs);
  if (u) {
    Term a = compose_term(t, u->left);
    Term b = compose_term(s, u->right);
    if (!(a == b)) return "mgu is not a unifier for " + to_string(sig, t) + " =? " + to_string(sig, s);
  }
  std::vector<int> used;
  for (int i = 0; i < nt; ++i)
    if (count_occurrences(t, i)) used.push_back(i);
  for (int i = 0; i < ns; ++i)
    if (count_occurrences(s, i)) used.push_back(nt + i);
  std::vector<std::size_t> pick(used.size(), 0);
  std::vector<Term> img_t(static_cast<std::size_t>(nt), Term::var(0, 0)), img_s(static_cast<std::size_t>(ns), Term::var(0, 0));
  while (true) {
    for (std::size_t k = 0; k < used.size(); ++k) {
      int v = used[k];
      if (v < nt) img_t[static_cast<std::size_t>(v)] = range[pick[k]];
      else img_s[static_cast<std::size_t>(v - nt)] = range[pick[k]];
    }
    if (substitute(t, std::span<const Term>(img_t)) == substitute(s, std::span<const Term>(img_s))) {
      if (!u) return "missed unifier for " + to_string(sig, t) + " =? " + to_string(sig, s);
      Substitution rho;
      bool ok = true;
      for (int v : used) {
        const Term& gen = v < nt ? u->left.terms[static_cast<std::size_t>(v)] : u->right.terms[static_cast<std::size_t>(v - nt)];
        const Term& inst = v < nt ? img_t[static_cast<std::size_t>(v)] : img_s[static_cast<std::size_t>(v - nt)];
        if (!match_into(gen, inst, rho)) {
          ok = false;
          break;
        }
      }
      if (!ok) return "unifier does not factor through the mgu for " + to_string(sig, t) + " =? " + to_string(sig, s);
    }
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == range.size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return {};
}

/// Count-mode composite δ_{n-1}∘δ_n as a matrix reduced mod d.
inline IntMatrix count_square(const TensoredComplex& tc, std::size_t n) {
  return multiply(tc.matrices[n], tc.matrices[n - 1], tc.modulus);
}

/// Σ_β [c:β]·[β:γ] for every chain c of dimension n ≥ 2, per tail, reduced mod d.
/// Returns the descriptions of nonzero entries.
inline std::vector<std::string> symbolic_square_violations(MorseComplex<SymbolicRing>& mc,
                                                           const std::vector<std::vector<Cell>>& chains,
                                                           std::size_t n, std::uint64_t d) {
  std::vector<std::string> bad;
  const Signature& sig = mc.trs().sig;
  for (const Cell& c : chains[n]) {
    std::map<Cell, RingoidElement> acc;
    for (const auto& [beta, outer] : mc.differential(c)) {
      if (beta.dim() == 0) continue;
      for (const auto& [gamma, inner] : mc.differential(beta)) {
        RingoidElement prod = mc.ring().mul(outer, inner);
        auto it = acc.find(gamma);
        if (it == acc.end()) acc.emplace(gamma, prod);
        else mc.ring().add_to(it->second, prod);
      }
    }
    for (const auto& [gamma, coef] : acc)
      for (const auto& [tail, k] : tail_counts(coef))
        if (mod(k, d) != 0)
          bad.push_back(to_string(sig, c) + " -> " + to_string(sig, gamma) + " tail " + to_string(sig, tail));
  }
  return bad;
}

/// Homology of the normalized bar complex of Z/2 with trivial coefficients.  That
/// complex has the single cell (a, ..., a) in each dimension; its faces are
/// a·(a..a) [counts 1], inner merges a·a = 1 [degenerate, 0] and the last face
/// with sign (-1)^n.
inline std::vector<HomologyGroup> z2_bar_oracle(std::size_t top) {
  TensoredComplex tc;
  tc.modulus = 0;
  tc.chain_counts.assign(top + 2, 1);
  tc.matrices.emplace_back(1, 0);
  for (std::size_t n = 1; n <= top + 1; ++n) {
    IntMatrix m(1, 1);
    m.at(0, 0) = 1 + (n % 2 ? -1 : 1);
    tc.matrices.push_back(m);
  }
  std::vector<HomologyGroup> out;
  for (std::size_t n = 0; n <= top; ++n) out.push_back(homology_group(tc, n));
  return out;
}

/// Group-by-group comparison of rank and torsion.
inline bool same_groups(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].rank != b[i].rank || a[i].torsion != b[i].torsion) return false;
  return true;
}

/// Homology H_0..H_top of a presentation with the given coefficient modulus.
inline std::vector<HomologyGroup> homology_of(const Trs& R, std::size_t top, std::uint64_t d) {
  auto chains = enumerate_chains(R, top + 1);
  MorseComplex<CountRing> mc(R);
  TensoredComplex tc = tensor_zd(mc, chains, d);
  std::vector<HomologyGroup> out;
  for (std::size_t n = 0; n <= top; ++n) out.push_back(homology_group(tc, n));
  return out;
}

}  // namespace testing_support
