#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lawvere/chains.hpp"
#include "lawvere/coeff.hpp"
#include "lawvere/error.hpp"
#include "lawvere/rewrite.hpp"

namespace lawvere {

enum class CellKind { Critical, Redundant, Collapsible };

std::string_view to_string(CellKind k);

struct CellClass {
  CellKind kind = CellKind::Critical;
  Cell partner;     // empty for critical cells
  int epsilon = 0;  // sign of the matched coefficient
};

/// Partner of a redundant cell (split of entry L), if the cell is redundant.
std::optional<Cell> redundant_partner(const Cell& c, const Trs& R);

/// Every merge index j (1-based, merging entries j and j+1) whose merged cell is
/// redundant with partner c.
std::vector<std::pair<std::size_t, Cell>> collapsible_partners(const Cell& c, const Trs& R, Normalizer& nf);

/// Integer coefficients: every monomial counts 1.
class CountRing {
 public:
  using Coef = std::int64_t;
  static constexpr bool symbolic = false;

  explicit CountRing(Normalizer&) {}
  Coef one(const Morphism&) const { return 1; }
  Coef kappa(std::size_t i, const Morphism& t, const Morphism&) const {
    return static_cast<Coef>(var_count(t.terms.at(0), static_cast<int>(i)));
  }
  Coef tail(const Morphism&, const Morphism&) const { return 1; }
  Coef mul(const Coef& a, const Coef& b) const { return checked_mul(a, b); }
  void add_to(Coef& acc, const Coef& b) const { acc = checked_add(acc, b); }
  Coef neg(const Coef& a) const { return -a; }
  bool is_zero(const Coef& a) const { return a == 0; }
  int unit(const Coef& a) const { return a == 1 ? 1 : (a == -1 ? -1 : 0); }
  std::int64_t count(const Coef& a) const { return a; }
  std::string show(const Signature&, const Coef& a) const { return std::to_string(a); }
};

/// Coefficients in the enveloping ringoid.
class SymbolicRing {
 public:
  using Coef = RingoidElement;
  static constexpr bool symbolic = true;

  explicit SymbolicRing(Normalizer& nf) : ring_(nf) {}
  Coef one(const Morphism& obj) const { return ring_.identity(obj); }
  Coef kappa(std::size_t i, const Morphism& t, const Morphism& sigma) const { return ring_.kappa(i, t, sigma); }
  Coef tail(const Morphism& alpha, const Morphism& src) const { return ring_.tail(alpha, src); }
  Coef mul(const Coef& a, const Coef& b) const { return ring_.multiply(a, b); }
  void add_to(Coef& acc, const Coef& b) const { acc = ring_.add(acc, b); }
  Coef neg(const Coef& a) const { return ring_.scale(a, -1); }
  bool is_zero(const Coef& a) const { return a.is_zero(); }
  int unit(const Coef& a) const { return unit_sign(a); }
  std::int64_t count(const Coef& a) const { return zd_count(a, 0); }
  std::string show(const Signature& sig, const Coef& a) const { return to_string(sig, a); }
  const Ringoid& ringoid() const { return ring_; }

 private:
  Ringoid ring_;
};

struct MorseOptions {
  std::size_t path_budget = 1000000;  // worklist steps per differential
};

/// Normalized bar complex of a reduced complete TRS with the chain matching.
/// Boundaries, classifications and objects are memoized; not thread-safe.
template <class Ring>
class MorseComplex {
 public:
  using Coef = typename Ring::Coef;
  using Boundary = std::vector<std::pair<Cell, Coef>>;

  explicit MorseComplex(const Trs& R, MorseOptions opt = {}) : R_(&R), nf_(R), ring_(nf_), opt_(opt) {}

  const Trs& trs() const { return *R_; }
  Ring& ring() { return ring_; }
  Normalizer& normalizer() { return nf_; }

  const Morphism& object(const Cell& c) {
    auto it = objects_.find(c);
    if (it != objects_.end()) return it->second;
    return objects_.emplace(c, cell_object(c, nf_)).first->second;
  }

  /// Φδᵘ of a normalized cell of dimension ≥ 1.
  const Boundary& boundary(const Cell& c) {
    auto it = boundaries_.find(c);
    if (it != boundaries_.end()) return it->second;
    return boundaries_.emplace(c, compute_boundary(c)).first->second;
  }

  const CellClass& classify(const Cell& c) {
    auto it = classes_.find(c);
    if (it != classes_.end()) return it->second;
    return classes_.emplace(c, compute_class(c)).first->second;
  }

  /// Morse differential of a chain: path expansion through redundant cells.
  Boundary differential(const Cell& chain) {
    auto it = differentials_.find(chain);
    if (it != differentials_.end()) return it->second;
    Boundary out = compute_differential(chain);
    differentials_.emplace(chain, out);
    return out;
  }

 private:
  Morphism obj_of(const Cell& c) {
    if constexpr (Ring::symbolic) return object(c);
    else return Morphism{};
  }

  void add_term(std::map<Cell, Coef>& acc, Cell cell, const Coef& c) {
    if (ring_.is_zero(c)) return;
    auto it = acc.find(cell);
    if (it == acc.end()) {
      acc.emplace(std::move(cell), c);
      return;
    }
    ring_.add_to(it->second, c);
    if (ring_.is_zero(it->second)) acc.erase(it);
  }

  // Φ applied to coefficient·(entries); entries may be non-essential.
  void normalize_into(std::map<Cell, Coef>& acc, Coef c, std::vector<Morphism> entries) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (is_partial_permutation(entries[i])) return;
      if (is_essential(entries[i])) continue;
      auto [ess, pi] = canonicalize(entries[i].context, entries[i].terms);
      entries[i] = std::move(ess);
      if (i + 1 < entries.size()) {
        entries[i + 1] = select(pi, entries[i + 1]);
      } else {
        Cell target{-1, entries};
        c = ring_.mul(c, ring_.tail(pi.as_morphism(), obj_of(target)));
      }
    }
    add_term(acc, Cell{-1, std::move(entries)}, c);
  }

  Boundary compute_boundary(const Cell& c) {
    const std::size_t n = c.dim();
    if (n == 0) throw Error(ErrorKind::InsufficientDimension, "0-cells have no boundary in the complex");
    std::map<Cell, Coef> acc;
    if (n == 1) {
      const Morphism& w = c.entries[0];
      const std::vector<SortId>& X = w.context;
      for (std::size_t i = 0; i < X.size(); ++i) {
        Cell target = Cell::zero(X[i]);
        Coef k = ring_.kappa(i, w, identity(X));
        Morphism proj{X, {Term::var(static_cast<int>(i), X[i])}};
        add_term(acc, target, ring_.mul(k, ring_.tail(proj, obj_of(target))));
      }
      Cell target = Cell::zero(w.terms[0].sort());
      add_term(acc, target, ring_.neg(ring_.tail(w, obj_of(target))));
    } else {
      // d_0
      Morphism sigma = c.entries[1];
      for (std::size_t i = 2; i < n; ++i) sigma = compose_raw(sigma, c.entries[i]);
      sigma = nf_.normalize(sigma);
      for (std::size_t i = 0; i < c.entries[1].arity(); ++i) {
        std::vector<Morphism> entries;
        entries.push_back(component(c.entries[1], i));
        entries.insert(entries.end(), c.entries.begin() + 2, c.entries.end());
        normalize_into(acc, ring_.kappa(i, c.entries[0], sigma), std::move(entries));
      }
      // d_j, 0 < j < n
      const Coef unit = ring_.one(obj_of(c));
      for (std::size_t j = 1; j < n; ++j) {
        std::vector<Morphism> entries;
        for (std::size_t k = 0; k + 1 < j; ++k) entries.push_back(c.entries[k]);
        entries.push_back(nf_.normalize(compose_raw(c.entries[j - 1], c.entries[j])));
        for (std::size_t k = j + 1; k < n; ++k) entries.push_back(c.entries[k]);
        normalize_into(acc, j % 2 ? ring_.neg(unit) : unit, std::move(entries));
      }
      // d_n
      std::vector<Morphism> entries(c.entries.begin(), c.entries.end() - 1);
      Cell front{-1, entries};
      Coef t = ring_.tail(c.entries.back(), obj_of(front));
      normalize_into(acc, n % 2 ? ring_.neg(t) : t, std::move(entries));
    }
    return Boundary(std::make_move_iterator(acc.begin()), std::make_move_iterator(acc.end()));
  }

  const Coef* coefficient_of(const Boundary& b, const Cell& target) {
    for (const auto& [cell, coef] : b)
      if (cell == target) return &coef;
    return nullptr;
  }

  CellClass compute_class(const Cell& c) {
    if (c.dim() == 0 || is_chain(c, *R_)) return CellClass{CellKind::Critical, {}, 0};
    if (auto partner = redundant_partner(c, *R_)) {
      const Coef* e = coefficient_of(boundary(*partner), c);
      int sign = e ? ring_.unit(*e) : 0;
      if (sign == 0)
        throw Error(ErrorKind::TrichotomyViolation, "matched coefficient of " + to_string(R_->sig, c) +
                                                        " in the boundary of its partner is not a unit");
      return CellClass{CellKind::Redundant, *partner, sign};
    }
    auto cands = collapsible_partners(c, *R_, nf_);
    if (cands.empty())
      throw Error(ErrorKind::TrichotomyViolation, "cell " + to_string(R_->sig, c) + " is neither critical nor matched");
    const Cell& partner = cands.front().second;
    const Coef* e = coefficient_of(boundary(c), partner);
    int sign = e ? ring_.unit(*e) : 0;
    if (sign == 0)
      throw Error(ErrorKind::TrichotomyViolation, "matched coefficient of " + to_string(R_->sig, partner) +
                                                      " in the boundary of " + to_string(R_->sig, c) +
                                                      " is not a unit");
    return CellClass{CellKind::Collapsible, partner, sign};
  }

  Boundary compute_differential(const Cell& chain) {
    std::map<Cell, Coef> result;
    std::map<Cell, Coef> pending;
    auto route = [&](const Cell& cell, const Coef& coef) {
      if (cell.dim() == 0) {
        add_term(result, cell, coef);
        return;
      }
      const CellClass& k = classify(cell);
      switch (k.kind) {
        case CellKind::Critical: add_term(result, cell, coef); break;
        case CellKind::Redundant: add_term(pending, cell, coef); break;
        case CellKind::Collapsible: break;
      }
    };
    for (const auto& [cell, coef] : boundary(chain)) route(cell, coef);
    std::size_t steps = 0;
    while (!pending.empty()) {
      if (++steps > opt_.path_budget)
        throw Error(ErrorKind::BudgetExceeded, "path expansion for " + to_string(R_->sig, chain) + " exceeded " +
                                                   std::to_string(opt_.path_budget) + " steps");
      auto node = pending.extract(pending.begin());
      const Cell& sigma = node.key();
      const CellClass k = classify(sigma);
      // σ = -ε Σ_{β≠σ} [μ:β] β in the collapsed complex, ε = ±1 being self-inverse.
      Coef c = k.epsilon > 0 ? ring_.neg(node.mapped()) : node.mapped();
      for (const auto& [beta, coef] : boundary(k.partner)) {
        if (beta == sigma) continue;
        route(beta, ring_.mul(c, coef));
      }
    }
    return Boundary(std::make_move_iterator(result.begin()), std::make_move_iterator(result.end()));
  }

  const Trs* R_;
  Normalizer nf_;
  Ring ring_;
  MorseOptions opt_;
  std::map<Cell, Morphism> objects_;
  std::map<Cell, Boundary> boundaries_;
  std::map<Cell, CellClass> classes_;
  std::map<Cell, Boundary> differentials_;
};

struct MatchingReport {
  std::size_t cells = 0;
  std::size_t critical = 0;
  std::size_t redundant = 0;
  std::size_t collapsible = 0;
  std::vector<std::string> violations;
};

/// Classifies every cell reachable from the chains through boundaries and partners,
/// checking the trichotomy, involution and unit coefficients.
template <class Ring>
MatchingReport certify_matching(MorseComplex<Ring>& mc, const std::vector<std::vector<Cell>>& chains) {
  MatchingReport rep;
  const Trs& R = mc.trs();
  std::map<Cell, bool> seen;
  std::vector<Cell> stack;
  auto visit = [&](const Cell& c) {
    if (c.dim() == 0 || seen.count(c)) return;
    seen.emplace(c, true);
    stack.push_back(c);
  };
  // Only cells strictly below the top dimension have their boundaries expanded;
  // top-dimensional partners would leave the computed range.
  std::size_t top = chains.empty() ? 0 : chains.size() - 1;
  for (std::size_t n = 1; n < chains.size(); ++n)
    for (const Cell& c : chains[n])
      for (const auto& [b, coef] : mc.boundary(c)) visit(b);
  while (!stack.empty()) {
    Cell c = std::move(stack.back());
    stack.pop_back();
    ++rep.cells;
    try {
      if (!is_normalized_cell(c, R)) rep.violations.push_back("not a normalized cell: " + to_string(R.sig, c));
      const CellClass k = mc.classify(c);
      const bool chain = is_chain(c, R);
      switch (k.kind) {
        case CellKind::Critical: ++rep.critical; break;
        case CellKind::Redundant: ++rep.redundant; break;
        case CellKind::Collapsible: ++rep.collapsible; break;
      }
      if (chain != (k.kind == CellKind::Critical))
        rep.violations.push_back("critical cells and chains disagree at " + to_string(R.sig, c));
      if (k.kind == CellKind::Critical) continue;
      if (k.epsilon != 1 && k.epsilon != -1) rep.violations.push_back("non-unit match at " + to_string(R.sig, c));
      const bool red = k.kind == CellKind::Redundant;
      const std::size_t pd = k.partner.dim();
      if (pd != (red ? c.dim() + 1 : c.dim() - 1))
        rep.violations.push_back("partner dimension mismatch at " + to_string(R.sig, c));
      const CellClass back = mc.classify(k.partner);
      const CellKind expect = red ? CellKind::Collapsible : CellKind::Redundant;
      if (back.kind != expect || !(back.partner == c) || back.epsilon != k.epsilon)
        rep.violations.push_back("partner is not an involution at " + to_string(R.sig, c));
      if (!red) {
        auto cands = collapsible_partners(c, R, mc.normalizer());
        if (cands.size() != 1)
          rep.violations.push_back("collapsible cell with " + std::to_string(cands.size()) +
                                   " matching merges: " + to_string(R.sig, c));
      }
      visit(k.partner);
      if (red && pd <= top)
        for (const auto& [b, coef] : mc.boundary(k.partner))
          if (b.dim() == c.dim()) visit(b);
    } catch (const Error& e) {
      rep.violations.push_back(e.what());
    }
  }
  return rep;
}

}  // namespace lawvere
