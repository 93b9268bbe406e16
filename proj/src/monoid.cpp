#include "lawvere/monoid.hpp"

#include <algorithm>
#include <random>

#include "lawvere/error.hpp"

namespace lawvere::monoid {

void validate(const Srs& R) {
  for (const StringRule& r : R.rules) {
    if (r.lhs.empty()) throw Error(ErrorKind::VariableOnLhsRoot, "rule '" + r.name + "' has an empty lhs");
    for (int a : r.lhs)
      if (a < 0 || static_cast<std::size_t>(a) >= R.letters.size())
        throw Error(ErrorKind::UndeclaredName, "rule '" + r.name + "' uses an undeclared letter");
    for (int a : r.rhs)
      if (a < 0 || static_cast<std::size_t>(a) >= R.letters.size())
        throw Error(ErrorKind::UndeclaredName, "rule '" + r.name + "' uses an undeclared letter");
  }
}

namespace {

bool occurs_at(const Word& w, std::size_t pos, const Word& l) {
  if (pos + l.size() > w.size()) return false;
  return std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

// Length of the shortest reducible prefix of w, or 0 when w is irreducible.
std::size_t shortest_reducible_prefix(const Word& w, const Srs& R) {
  for (std::size_t end = 1; end <= w.size(); ++end)
    for (const StringRule& r : R.rules)
      if (r.lhs.size() <= end && occurs_at(w, end - r.lhs.size(), r.lhs)) return end;
  return 0;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

std::optional<std::size_t> find_redex(const Word& w, const Srs& R, std::size_t* rule) {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t k = 0; k < R.rules.size(); ++k)
      if (occurs_at(w, pos, R.rules[k].lhs)) {
        if (rule) *rule = k;
        return pos;
      }
  return std::nullopt;
}

bool is_irreducible(const Word& w, const Srs& R) { return !find_redex(w, R).has_value(); }

Word normal_form(const Word& w0, const Srs& R) {
  Word w = w0;
  std::size_t steps = 0;
  std::size_t k = 0;
  while (auto pos = find_redex(w, R, &k)) {
    if (++steps > R.step_budget)
      throw Error(ErrorKind::BudgetExceeded, "word normalization exceeded " + std::to_string(R.step_budget) + " steps");
    const StringRule& r = R.rules[k];
    Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
    next.insert(next.end(), r.rhs.begin(), r.rhs.end());
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos + r.lhs.size()), w.end());
    w = std::move(next);
  }
  return w;
}

SrsReport check_complete(const Srs& R) {
  SrsReport rep;
  for (std::size_t k = 0; k < R.rules.size(); ++k) {
    Srs others{R.letters, {}, R.step_budget};
    for (std::size_t j = 0; j < R.rules.size(); ++j)
      if (j != k) others.rules.push_back(R.rules[j]);
    if (!is_irreducible(R.rules[k].lhs, others)) {
      rep.reduced = false;
      rep.issues.push_back("lhs of " + R.rules[k].name + " is reducible by another rule");
    }
    if (!is_irreducible(R.rules[k].rhs, R)) {
      rep.reduced = false;
      rep.issues.push_back("rhs of " + R.rules[k].name + " is reducible");
    }
  }

  std::vector<Word> sample;
  for (const StringRule& r : R.rules) sample.push_back(r.rhs);
  std::mt19937_64 rng(20240611);
  if (!R.letters.empty())
    for (int i = 0; i < 200; ++i) {
      Word w(static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 8)(rng)));
      for (int& a : w) a = std::uniform_int_distribution<int>(0, static_cast<int>(R.letters.size()) - 1)(rng);
      sample.push_back(std::move(w));
    }

  // Overlaps: a proper suffix of l_i equal to a proper prefix of l_j, or l_j inside l_i.
  std::vector<std::pair<Word, Word>> pairs;
  for (std::size_t i = 0; i < R.rules.size(); ++i) {
    const StringRule& a = R.rules[i];
    for (std::size_t j = 0; j < R.rules.size(); ++j) {
      const StringRule& b = R.rules[j];
      for (std::size_t k = 1; k < a.lhs.size(); ++k) {
        std::size_t overlap = a.lhs.size() - k;
        if (overlap >= b.lhs.size()) continue;
        if (!std::equal(a.lhs.begin() + static_cast<std::ptrdiff_t>(k), a.lhs.end(), b.lhs.begin())) continue;
        Word tail(b.lhs.begin() + static_cast<std::ptrdiff_t>(overlap), b.lhs.end());
        Word head(a.lhs.begin(), a.lhs.begin() + static_cast<std::ptrdiff_t>(k));
        pairs.emplace_back(concat(a.rhs, tail), concat(head, b.rhs));
      }
      if (i == j) continue;
      for (std::size_t pos = 0; pos + b.lhs.size() <= a.lhs.size(); ++pos)
        if (occurs_at(a.lhs, pos, b.lhs)) {
          Word w(a.lhs.begin(), a.lhs.begin() + static_cast<std::ptrdiff_t>(pos));
          w.insert(w.end(), b.rhs.begin(), b.rhs.end());
          w.insert(w.end(), a.lhs.begin() + static_cast<std::ptrdiff_t>(pos + b.lhs.size()), a.lhs.end());
          pairs.emplace_back(a.rhs, w);
        }
    }
  }
  rep.critical_pairs = pairs.size();
  try {
    for (const Word& w : sample) normal_form(w, R);
  } catch (const Error& e) {
    rep.termination_ok = false;
    rep.budget_failure = std::string("termination probe: ") + e.what();
    return rep;
  }
  try {
    for (const auto& [x, y] : pairs)
      if (normal_form(x, R) != normal_form(y, R)) {
        rep.locally_confluent = false;
        rep.issues.push_back("critical pair " + word_string(R, x) + " / " + word_string(R, y) + " is not joinable");
      }
  } catch (const Error& e) {
    rep.budget_failure = std::string("critical pair: ") + e.what();
  }
  return rep;
}

void require_certified(const Srs& R) {
  SrsReport rep = check_complete(R);
  if (rep.budget_failure) throw Error(ErrorKind::BudgetExceeded, *rep.budget_failure);
  if (!rep.certified()) {
    std::string why;
    for (const auto& s : rep.issues) why += " " + s + ";";
    throw Error(ErrorKind::CompletenessNotCertified, "string rewriting system:" + why);
  }
}

std::vector<Word> chain_extensions(const WordCell& chain, const Srs& R) {
  std::vector<Word> out;
  if (chain.empty()) return out;
  const Word& prev = chain.back();
  for (std::size_t start = 0; start < prev.size(); ++start)
    for (const StringRule& r : R.rules) {
      std::size_t inside = prev.size() - start;
      if (r.lhs.size() <= inside) continue;
      if (!std::equal(prev.begin() + static_cast<std::ptrdiff_t>(start), prev.end(), r.lhs.begin())) continue;
      Word u(r.lhs.begin() + static_cast<std::ptrdiff_t>(inside), r.lhs.end());
      if (!is_irreducible(u, R)) continue;
      if (shortest_reducible_prefix(concat(prev, u), R) != prev.size() + u.size()) continue;
      if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(std::move(u));
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool extends(const WordCell& c, std::size_t k, const Srs& R) {
  if (!is_irreducible(c[k - 1], R) || c[k - 1].empty()) return false;
  if (k == 1) return c[0].size() == 1;
  Word uv = concat(c[k - 2], c[k - 1]);
  return shortest_reducible_prefix(uv, R) == uv.size();
}

}  // namespace

std::size_t chain_prefix_length(const WordCell& c, const Srs& R) {
  std::size_t i = 0;
  while (i < c.size() && extends(c, i + 1, R)) ++i;
  return i;
}

bool is_chain(const WordCell& c, const Srs& R) { return chain_prefix_length(c, R) == c.size(); }

std::vector<std::vector<WordCell>> enumerate_chains(const Srs& R, std::size_t max_dim, bool certify) {
  if (certify) require_certified(R);
  std::vector<std::vector<WordCell>> out(max_dim + 1);
  out[0].push_back({});
  if (max_dim == 0) return out;
  for (std::size_t a = 0; a < R.letters.size(); ++a) out[1].push_back({Word{static_cast<int>(a)}});
  for (std::size_t n = 2; n <= max_dim; ++n) {
    for (const WordCell& prev : out[n - 1])
      for (Word& u : chain_extensions(prev, R)) {
        WordCell c = prev;
        c.push_back(std::move(u));
        out[n].push_back(std::move(c));
      }
    std::sort(out[n].begin(), out[n].end());
  }
  return out;
}

RingElement MonoidComplex::multiply(const RingElement& a, const RingElement& b) const {
  RingElement out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b) {
      Word w = normal_form(concat(u, v), *R_);
      std::int64_t& slot = out[w];
      slot = checked_add(slot, checked_mul(x, y));
      if (slot == 0) out.erase(w);
    }
  return out;
}

namespace {

void add_term(std::map<WordCell, RingElement>& acc, const WordCell& c, const RingElement& coef) {
  RingElement& slot = acc[c];
  for (const auto& [w, k] : coef) {
    std::int64_t& x = slot[w];
    x = checked_add(x, k);
    if (x == 0) slot.erase(w);
  }
  if (slot.empty()) acc.erase(c);
}

RingElement scalar(std::int64_t k) { return RingElement{{Word{}, k}}; }

}  // namespace

const MonoidComplex::Boundary& MonoidComplex::boundary(const WordCell& c) {
  if (auto it = boundaries_.find(c); it != boundaries_.end()) return it->second;
  const std::size_t n = c.size();
  if (n == 0) throw Error(ErrorKind::InsufficientDimension, "the 0-cell has no boundary");
  std::map<WordCell, RingElement> acc;
  add_term(acc, WordCell(c.begin() + 1, c.end()), RingElement{{c[0], 1}});
  for (std::size_t i = 1; i < n; ++i) {
    Word merged = normal_form(concat(c[i - 1], c[i]), *R_);
    if (merged.empty()) continue;
    WordCell face(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i - 1));
    face.push_back(std::move(merged));
    face.insert(face.end(), c.begin() + static_cast<std::ptrdiff_t>(i + 1), c.end());
    add_term(acc, face, scalar(i % 2 ? -1 : 1));
  }
  add_term(acc, WordCell(c.begin(), c.end() - 1), scalar(n % 2 ? -1 : 1));
  return boundaries_.emplace(c, Boundary(acc.begin(), acc.end())).first->second;
}

namespace {

int unit_of(const MonoidComplex::Boundary& b, const WordCell& target) {
  for (const auto& [cell, coef] : b)
    if (cell == target) {
      if (coef.size() == 1 && coef.begin()->first.empty()) {
        std::int64_t k = coef.begin()->second;
        if (k == 1 || k == -1) return static_cast<int>(k);
      }
      return 0;
    }
  return 0;
}

}  // namespace

const WordCellClass& MonoidComplex::classify(const WordCell& c) {
  if (auto it = classes_.find(c); it != classes_.end()) return it->second;
  const Srs& R = *R_;
  WordCellClass k;
  const std::size_t i = chain_prefix_length(c, R);
  if (c.empty() || i == c.size()) return classes_.emplace(c, k).first->second;

  if (i == 0) {
    WordCell partner{Word{c[0][0]}, Word(c[0].begin() + 1, c[0].end())};
    partner.insert(partner.end(), c.begin() + 1, c.end());
    k = WordCellClass{WordCellKind::Redundant, std::move(partner), 0};
  } else {
    const Word& vi = c[i - 1];
    const Word& vn = c[i];
    Word uv = concat(vi, vn);
    std::size_t cut = shortest_reducible_prefix(uv, R);
    if (cut == 0) {
      WordCell partner(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i - 1));
      partner.push_back(uv);
      partner.insert(partner.end(), c.begin() + static_cast<std::ptrdiff_t>(i + 1), c.end());
      k = WordCellClass{WordCellKind::Collapsible, std::move(partner), 0};
    } else {
      if (cut <= vi.size() || cut >= uv.size())
        throw Error(ErrorKind::TrichotomyViolation, "cell " + to_string(R, c) + " is neither critical nor matched");
      WordCell partner(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
      partner.push_back(Word(uv.begin() + static_cast<std::ptrdiff_t>(vi.size()),
                             uv.begin() + static_cast<std::ptrdiff_t>(cut)));
      partner.push_back(Word(uv.begin() + static_cast<std::ptrdiff_t>(cut), uv.end()));
      partner.insert(partner.end(), c.begin() + static_cast<std::ptrdiff_t>(i + 1), c.end());
      k = WordCellClass{WordCellKind::Redundant, std::move(partner), 0};
    }
  }
  k.epsilon = k.kind == WordCellKind::Redundant ? unit_of(boundary(k.partner), c) : unit_of(boundary(c), k.partner);
  if (k.epsilon == 0)
    throw Error(ErrorKind::TrichotomyViolation, "matched coefficient at " + to_string(R, c) + " is not a unit");
  return classes_.emplace(c, std::move(k)).first->second;
}

MonoidComplex::Boundary MonoidComplex::differential(const WordCell& chain) {
  std::map<WordCell, RingElement> result, pending;
  auto route = [&](const WordCell& cell, const RingElement& coef) {
    if (coef.empty()) return;
    const WordCellClass& k = classify(cell);
    if (k.kind == WordCellKind::Critical) add_term(result, cell, coef);
    else if (k.kind == WordCellKind::Redundant) add_term(pending, cell, coef);
  };
  for (const auto& [cell, coef] : boundary(chain)) route(cell, coef);
  std::size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > budget_) throw Error(ErrorKind::BudgetExceeded, "monoid path expansion exceeded its budget");
    auto node = pending.extract(pending.begin());
    const WordCellClass k = classify(node.key());
    RingElement c = multiply(node.mapped(), scalar(-k.epsilon));
    for (const auto& [beta, coef] : boundary(k.partner)) {
      if (beta == node.key()) continue;
      route(beta, multiply(c, coef));
    }
  }
  return Boundary(result.begin(), result.end());
}

TensoredComplex tensor_trivial(MonoidComplex& mc, const std::vector<std::vector<WordCell>>& chains) {
  TensoredComplex tc;
  tc.modulus = 0;
  for (const auto& level : chains) tc.chain_counts.push_back(level.size());
  tc.matrices.emplace_back(chains.empty() ? 0 : chains[0].size(), 0);
  for (std::size_t n = 1; n < chains.size(); ++n) {
    IntMatrix m(chains[n].size(), chains[n - 1].size());
    for (std::size_t i = 0; i < chains[n].size(); ++i)
      for (const auto& [target, coef] : mc.differential(chains[n][i])) {
        auto it = std::lower_bound(chains[n - 1].begin(), chains[n - 1].end(), target);
        if (it == chains[n - 1].end() || *it != target)
          throw Error(ErrorKind::TrichotomyViolation, "differential reaches a non-chain cell");
        std::int64_t v = 0;
        for (const auto& [w, k] : coef) v = checked_add(v, k);
        m.at(i, static_cast<std::size_t>(it - chains[n - 1].begin())) = v;
      }
    tc.matrices.push_back(std::move(m));
  }
  return tc;
}

std::string word_string(const Srs& R, const Word& w) {
  if (w.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += R.letters.at(static_cast<std::size_t>(w[i]));
  }
  return s;
}

std::string to_string(const Srs& R, const WordCell& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += word_string(R, c[i]);
  }
  return s + ")";
}

}  // namespace lawvere::monoid
