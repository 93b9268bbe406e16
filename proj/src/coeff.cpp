#include "lawvere/coeff.hpp"

#include <algorithm>

#include "lawvere/error.hpp"

namespace lawvere {

std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
  if (auto c = a.op <=> b.op; c != 0) return c;
  if (auto c = a.arg <=> b.arg; c != 0) return c;
  return a.sigma <=> b.sigma;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                      b.factors.end());
      c != 0)
    return c;
  return a.tail <=> b.tail;
}

std::size_t RingoidElement::num_monomials() const {
  std::size_t n = 0;
  for (const auto& [m, k] : terms) n += static_cast<std::size_t>(k < 0 ? -k : k);
  return n;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::BudgetExceeded, "integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::BudgetExceeded, "integer coefficient overflow");
  return r;
}

namespace {

void accumulate(std::map<Monomial, std::int64_t>& into, const Monomial& m, std::int64_t k) {
  if (k == 0) return;
  auto [it, inserted] = into.try_emplace(m, k);
  if (inserted) return;
  it->second = checked_add(it->second, k);
  if (it->second == 0) into.erase(it);
}

Morphism single(const Morphism& ctx_owner, const Term& t) { return Morphism{ctx_owner.context, {t}}; }

}  // namespace

RingoidElement Ringoid::zero(const Morphism& src, const Morphism& tgt) const { return RingoidElement{src, tgt, {}}; }

RingoidElement Ringoid::identity(const Morphism& obj) const {
  RingoidElement e{obj, obj, {}};
  e.terms.emplace(Monomial{{}, lawvere::identity(obj.context)}, 1);
  return e;
}

RingoidElement Ringoid::tail(const Morphism& alpha, const Morphism& src) const {
  Morphism a = nf_->normalize(alpha);
  RingoidElement e{src, nf_->normalize(compose_raw(src, a)), {}};
  e.terms.emplace(Monomial{{}, std::move(a)}, 1);
  return e;
}

RingoidElement Ringoid::generator(OpId f, int arg, const Morphism& sigma) const {
  Morphism s = nf_->normalize(sigma);
  const Term& first = s.terms.at(static_cast<std::size_t>(arg - 1));
  OpDecl decl = nf_->trs().sig.op(f);
  Term whole = Term::app(f, decl.result, s.terms);
  RingoidElement e{single(s, first), single(s, nf_->normalize(whole)), {}};
  e.terms.emplace(Monomial{{Factor{f, arg, s}}, lawvere::identity(s.context)}, 1);
  return e;
}

std::vector<std::pair<Monomial, std::int64_t>> Ringoid::kappa_terms(std::size_t i, const Term& t,
                                                                    const Morphism& sigma) const {
  std::vector<std::pair<Monomial, std::int64_t>> out;
  if (t.is_var()) {
    if (static_cast<std::size_t>(t.var_index()) == i)
      out.emplace_back(Monomial{{}, lawvere::identity(sigma.context)}, 1);
    return out;
  }
  Morphism args{sigma.context, {}};
  for (const Term& a : t.args()) args.terms.push_back(compose_term(a, sigma));
  args = nf_->normalize(args);
  for (std::size_t j = 0; j < t.args().size(); ++j) {
    for (auto& [m, k] : kappa_terms(i, t.args()[j], sigma)) {
      Monomial mm;
      mm.factors.push_back(Factor{t.op(), static_cast<int>(j + 1), args});
      mm.factors.insert(mm.factors.end(), m.factors.begin(), m.factors.end());
      mm.tail = std::move(m.tail);
      out.emplace_back(std::move(mm), k);
    }
  }
  return out;
}

RingoidElement Ringoid::kappa(std::size_t i, const Morphism& t, const Morphism& sigma) const {
  if (t.terms.size() != 1) throw Error(ErrorKind::ArityMismatch, "kappa needs a single-term morphism");
  if (i >= t.context.size() || sigma.terms.size() != t.context.size())
    throw Error(ErrorKind::ArityMismatch, "kappa index or subscript does not fit the context");
  Morphism s = nf_->normalize(sigma);
  RingoidElement e{single(s, s.terms[i]), single(s, nf_->normalize(compose_term(t.terms[0], s))), {}};
  for (auto& [m, k] : kappa_terms(i, t.terms[0], s)) accumulate(e.terms, m, k);
  return e;
}

RingoidElement Ringoid::multiply(const RingoidElement& a, const RingoidElement& b) const {
  if (!(a.src == b.tgt))
    throw Error(ErrorKind::ObjectMismatch, "cannot compose: source " + to_string(nf_->trs().sig, a.src) +
                                               " differs from target " + to_string(nf_->trs().sig, b.tgt));
  RingoidElement out{b.src, a.tgt, {}};
  for (const auto& [ma, ka] : a.terms) {
    for (const auto& [mb, kb] : b.terms) {
      Monomial m;
      m.factors = ma.factors;
      for (const Factor& f : mb.factors)
        m.factors.push_back(Factor{f.op, f.arg, nf_->normalize(compose_raw(f.sigma, ma.tail))});
      m.tail = nf_->normalize(compose_raw(mb.tail, ma.tail));
      accumulate(out.terms, m, checked_mul(ka, kb));
    }
  }
  return out;
}

RingoidElement Ringoid::add(const RingoidElement& a, const RingoidElement& b) const {
  if (!(a.src == b.src) || !(a.tgt == b.tgt))
    throw Error(ErrorKind::ObjectMismatch, "cannot add elements between different objects");
  RingoidElement out = a;
  for (const auto& [m, k] : b.terms) accumulate(out.terms, m, k);
  return out;
}

RingoidElement Ringoid::scale(const RingoidElement& a, std::int64_t k) const {
  RingoidElement out{a.src, a.tgt, {}};
  for (const auto& [m, c] : a.terms) accumulate(out.terms, m, checked_mul(c, k));
  return out;
}

std::int64_t zd_count(const RingoidElement& a, std::uint64_t d) {
  std::int64_t s = 0;
  for (const auto& [m, k] : a.terms) s = checked_add(s, k);
  if (d == 0) return s;
  auto dd = static_cast<std::int64_t>(d);
  return ((s % dd) + dd) % dd;
}

std::map<Morphism, std::int64_t> tail_counts(const RingoidElement& a) {
  std::map<Morphism, std::int64_t> out;
  for (const auto& [m, k] : a.terms) out[m.tail] = checked_add(out[m.tail], k);
  return out;
}

int unit_sign(const RingoidElement& a) {
  if (a.terms.size() != 1 || !(a.src == a.tgt)) return 0;
  const auto& [m, k] = *a.terms.begin();
  if (!m.factors.empty() || !is_identity(m.tail)) return 0;
  return k == 1 ? 1 : (k == -1 ? -1 : 0);
}

std::string to_string(const Signature& sig, const RingoidElement& a) {
  if (a.terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, k] : a.terms) {
    if (!first) s += k < 0 ? " - " : " + ";
    else if (k < 0) s += "-";
    first = false;
    std::int64_t mag = k < 0 ? -k : k;
    std::string body;
    for (const Factor& f : m.factors)
      body += "∂" + std::to_string(f.arg) + "(" + sig.op(f.op).name + ")_{" + to_string(sig, f.sigma) + "}";
    if (!is_identity(m.tail)) body += to_string(sig, m.tail) + "*";
    if (body.empty()) body = "1";
    s += mag == 1 ? body : std::to_string(mag) + "·" + body;
  }
  return s;
}

}  // namespace lawvere
