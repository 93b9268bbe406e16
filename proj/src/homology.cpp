#include "lawvere/homology.hpp"

#include <algorithm>
#include <utility>

namespace lawvere {

bool IntMatrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::uint64_t d) {
  if (a.cols != b.rows) throw Error(ErrorKind::ArityMismatch, "matrix shapes do not compose");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      std::int64_t x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) = checked_add(out.at(i, j), checked_mul(x, b.at(k, j)));
    }
  if (d > 0) {
    auto dd = static_cast<std::int64_t>(d);
    for (auto& v : out.data) v = ((v % dd) + dd) % dd;
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

void require_supported_modulus(std::uint64_t d) {
  if (d != 0 && !is_prime(d))
    throw Error(ErrorKind::UnsupportedDegree, "coefficients Z/" + std::to_string(d) + " need d = 0 or d prime");
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows, C = m.cols;
  std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m.at(i, j);

  SmithForm out;
  std::size_t t = 0;
  while (t < R && t < C) {
    // Pivot on the entry of minimal absolute value.
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a[i][j] != 0 && (pi == R || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == R) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < R; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = true;
    for (std::size_t i = t + 1; i < R; ++i) {
      if (a[i][t] == 0) continue;
      BigInt q = a[i][t] / a[t][t];
      for (std::size_t j = t; j < C; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < C; ++j) {
      if (a[t][j] == 0) continue;
      BigInt q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < R; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pivot again

    // Enforce divisibility: fold a non-divisible row into the pivot row.
    bool divides = true;
    for (std::size_t i = t + 1; i < R && divides; ++i)
      for (std::size_t j = t + 1; j < C; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < C; ++k) a[t][k] += a[i][k];
          divides = false;
          break;
        }
    if (!divides) continue;
    out.diagonal.push_back(abs(a[t][t]));
    ++t;
  }
  out.rank = out.diagonal.size();
  return out;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const auto P = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = ((m.at(i, j) % P) + P) % P;
  auto inverse = [&](std::int64_t x) {
    std::int64_t r = 1, b = x, e = P - 2;
    while (e > 0) {
      if (e & 1) r = static_cast<std::int64_t>((static_cast<__int128>(r) * b) % P);
      b = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % P);
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && a[piv][col] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[rank], a[piv]);
    std::int64_t inv = inverse(a[rank][col]);
    for (std::size_t j = col; j < m.cols; ++j)
      a[rank][j] = static_cast<std::int64_t>((static_cast<__int128>(a[rank][j]) * inv) % P);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      std::int64_t f = a[i][col];
      for (std::size_t j = col; j < m.cols; ++j)
        a[i][j] = static_cast<std::int64_t>(((a[i][j] - static_cast<__int128>(f) * a[rank][j]) % P + P) % P);
    }
    ++rank;
  }
  return rank;
}

HomologyGroup homology_group(const TensoredComplex& tc, std::size_t n) {
  if (n + 1 >= tc.matrices.size())
    throw Error(ErrorKind::InsufficientDimension, "H_" + std::to_string(n) + " needs the differential of dimension " +
                                                      std::to_string(n + 1));
  HomologyGroup h;
  h.dim = n;
  h.modulus = tc.modulus;
  h.chains = tc.chain_counts.at(n);
  const IntMatrix& out_map = tc.matrices[n];     // C_n -> C_{n-1}
  const IntMatrix& in_map = tc.matrices[n + 1];  // C_{n+1} -> C_n
  if (tc.modulus == 0) {
    SmithForm a = smith_normal_form(out_map);
    SmithForm b = smith_normal_form(in_map);
    h.rank = h.chains - a.rank - b.rank;
    for (const BigInt& x : b.diagonal)
      if (x > 1) h.torsion.push_back(x);
  } else {
    h.rank = h.chains - rank_mod_p(out_map, tc.modulus) - rank_mod_p(in_map, tc.modulus);
  }
  return h;
}

InequalityReport morse_inequalities(const std::vector<HomologyGroup>& groups, const std::vector<std::size_t>& counts,
                                    std::size_t n) {
  if (n >= groups.size() || n >= counts.size())
    throw Error(ErrorKind::InsufficientDimension, "inequality at dimension " + std::to_string(n) + " needs H_0..H_n");
  InequalityReport rep;
  rep.dim = n;
  rep.modulus = groups[n].modulus;
  rep.critical.assign(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(n + 1));
  rep.s_n = groups[n].s();
  rep.weak_holds = counts[n] >= rep.s_n;
  std::int64_t lhs = 0, rhs = static_cast<std::int64_t>(rep.s_n);
  for (std::size_t i = 0; i <= n; ++i) {
    std::int64_t sign = (n - i) % 2 ? -1 : 1;
    lhs += sign * static_cast<std::int64_t>(counts[i]);
    if (i < n) {
      rep.ranks.push_back(groups[i].rank);
      rhs += sign * static_cast<std::int64_t>(groups[i].rank);
    }
  }
  rep.strong_lhs = lhs;
  rep.strong_rhs = rhs;
  rep.strong_holds = lhs >= rhs;
  return rep;
}

std::string to_string(const HomologyGroup& h) {
  std::string base = h.modulus == 0 ? "Z" : "F" + std::to_string(h.modulus);
  std::string s;
  if (h.rank > 0) s = h.rank == 1 ? base : base + "^" + std::to_string(h.rank);
  for (const BigInt& t : h.torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

}  // namespace lawvere
