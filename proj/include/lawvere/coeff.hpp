#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lawvere/morphism.hpp"
#include "lawvere/rewrite.hpp"

namespace lawvere {

/// Generator ∂_arg(op)_sigma (arg is 1-based).
struct Factor {
  OpId op = 0;
  int arg = 1;
  Morphism sigma;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b);
};

/// factors[0] ... factors[k-1] · tail*.
struct Monomial {
  std::vector<Factor> factors;
  Morphism tail;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/// Integer combination of monomials, a morphism src -> tgt of the enveloping
/// ringoid.  Objects are single-term morphisms in normal form.
struct RingoidElement {
  Morphism src;
  Morphism tgt;
  std::map<Monomial, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t num_monomials() const;

  friend bool operator==(const RingoidElement&, const RingoidElement&) = default;
};

/// Monomial arithmetic over a fixed reduced complete rewriting system.  Subscripts
/// and tails are kept in normal form.
class Ringoid {
 public:
  explicit Ringoid(Normalizer& nf) : nf_(&nf) {}

  RingoidElement zero(const Morphism& src, const Morphism& tgt) const;
  RingoidElement identity(const Morphism& obj) const;
  /// alpha* : src -> src·alpha.
  RingoidElement tail(const Morphism& alpha, const Morphism& src) const;
  /// Single generator ∂_arg(f)_sigma.
  RingoidElement generator(OpId f, int arg, const Morphism& sigma) const;
  /// κ_i(t)_sigma for the single-term morphism t; i is 0-based.
  RingoidElement kappa(std::size_t i, const Morphism& t, const Morphism& sigma) const;

  /// a ∘ b, defined when a.src == b.tgt.
  RingoidElement multiply(const RingoidElement& a, const RingoidElement& b) const;
  RingoidElement add(const RingoidElement& a, const RingoidElement& b) const;
  RingoidElement scale(const RingoidElement& a, std::int64_t k) const;

  Normalizer& normalizer() const { return *nf_; }

 private:
  std::vector<std::pair<Monomial, std::int64_t>> kappa_terms(std::size_t i, const Term& t,
                                                             const Morphism& sigma) const;
  Normalizer* nf_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Signed number of monomials, reduced into [0, d) when d > 0.
std::int64_t zd_count(const RingoidElement& a, std::uint64_t d);

/// Signed monomial count per tail.  Each is invariant under the defining relations
/// modulo the degree.
std::map<Morphism, std::int64_t> tail_counts(const RingoidElement& a);

/// +1 or -1 when a is ± the identity, else 0.
int unit_sign(const RingoidElement& a);

std::string to_string(const Signature& sig, const RingoidElement& a);

}  // namespace lawvere
