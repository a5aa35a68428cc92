#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library's algorithms; only plain data types are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "hypermat/orbits.hpp"
#include "hypermat/weights.hpp"

namespace oracle {

namespace detail {

// Number of ways to send each part of mu to one of the variables so that
// variable i receives exactly target[i] in total.
inline std::int64_t count_assignments(const std::vector<int>& mu, std::size_t k, std::vector<int>& target) {
  if (k == mu.size()) {
    for (int t : target)
      if (t != 0) return 0;
    return 1;
  }
  std::int64_t total = 0;
  for (auto& t : target)
    if (t >= mu[k]) {
      t -= mu[k];
      total += count_assignments(mu, k + 1, target);
      t += mu[k];
    }
  return total;
}

}  // namespace detail

// chi^lam(mu) as the coefficient of x^(lam + delta) in a_delta * p_mu (Frobenius),
// with a_delta expanded as a signed sum over permutations of delta.
inline std::int64_t frobenius_character(const std::vector<int>& lam, const std::vector<int>& mu) {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> cache;
  if (auto it = cache.find({lam, mu}); it != cache.end()) return it->second;
  const std::size_t n = std::max<std::size_t>(lam.size(), 1);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += sigma[a] > sigma[b];
    std::vector<int> target(n);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      // exponent of x_i in lam + delta minus the one contributed by a_delta
      target[i] = (i < lam.size() ? lam[i] : 0) + static_cast<int>(n - 1 - i) - static_cast<int>(n - 1 - sigma[i]);
      ok = ok && target[i] >= 0;
    }
    if (ok) total += (inversions % 2 ? -1 : 1) * detail::count_assignments(mu, 0, target);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  cache[{lam, mu}] = total;
  return total;
}

// d! / prod of hook lengths.
inline mpz_class hook_length_dimension(const std::vector<int>& lam) {
  int d = std::accumulate(lam.begin(), lam.end(), 0);
  mpz_class num = 1, den = 1;
  for (int i = 2; i <= d; ++i) num *= i;
  for (std::size_t i = 0; i < lam.size(); ++i)
    for (int j = 0; j < lam[i]; ++j) {
      int leg = 0;
      for (std::size_t k = i + 1; k < lam.size() && lam[k] > j; ++k) ++leg;
      den *= lam[i] - j - 1 + leg + 1;
    }
  return num / den;
}

inline std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// (1/d!) sum over every permutation of chi_lam chi_mu chi_nu.
inline std::int64_t brute_kronecker(const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
  const int d = std::accumulate(lam.begin(), lam.end(), 0);
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, std::int64_t> cache;
  std::int64_t total = 0, count = 0;
  do {
    const auto ct = cycle_type(perm);
    auto it = cache.find(ct);
    if (it == cache.end())
      it = cache.emplace(ct, frobenius_character(lam, ct) * frobenius_character(mu, ct) * frobenius_character(nu, ct))
               .first;
    total += it->second;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / count;
}

inline std::vector<std::vector<int>> partitions(int d, int max_part = -1) {
  if (max_part < 0) max_part = d;
  if (d == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(d, max_part); first >= 1; --first)
    for (auto rest : partitions(d - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

inline std::int64_t binomial(int n, int k) {
  std::vector<std::vector<std::int64_t>> pascal(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    pascal[i][0] = 1;
    for (int j = 1; j <= i; ++j) pascal[i][j] = pascal[i - 1][j - 1] + pascal[i - 1][j];
  }
  return (k < 0 || k > n) ? 0 : pascal[n][k];
}

// Torus weights of Sym^d(V) (sign = +1) or Sym^d(V*) (sign = -1), V = C^2 (x) C^2 (x) C^2,
// counted by enumerating monomials in the eight coordinates.
struct TorusCharacter {
  std::map<std::array<int, 6>, std::int64_t> weights;

  TorusCharacter(int d, int sign) {
    std::array<int, 8> exps{};
    enumerate(exps, 0, d, sign);
  }

  std::int64_t at(const std::array<int, 6>& w) const {
    auto it = weights.find(w);
    return it == weights.end() ? 0 : it->second;
  }

  // Irreducible multiplicity by the Weyl alternation over (Z/2)^3.
  std::int64_t irreducible_mult(const hypermat::TripleWeight& t) const {
    const std::array<std::int64_t, 6> base{t.lam.a, t.lam.b, t.mu.a, t.mu.b, t.nu.a, t.nu.b};
    std::int64_t total = 0;
    for (int s = 0; s < 8; ++s) {
      std::array<int, 6> w{};
      int sign = 1;
      for (int f = 0; f < 3; ++f) {
        const int shift = (s >> f) & 1;
        w[2 * f] = static_cast<int>(base[2 * f]) + shift;
        w[2 * f + 1] = static_cast<int>(base[2 * f + 1]) - shift;
        if (shift) sign = -sign;
      }
      total += sign * at(w);
    }
    return total;
  }

 private:
  void enumerate(std::array<int, 8>& exps, int var, int remaining, int sign) {
    if (var == 7) {
      exps[7] = remaining;
      std::array<int, 6> w{};
      for (int v = 0; v < 8; ++v) {
        const int i = v >> 2, j = (v >> 1) & 1, k = v & 1;
        w[i] += sign * exps[v];
        w[2 + j] += sign * exps[v];
        w[4 + k] += sign * exps[v];
      }
      weights[w] += 1;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[var] = e;
      enumerate(exps, var + 1, remaining - e, sign);
    }
  }
};

// Cayley hyperdeterminant as the discriminant of the binary quadratic
// det(x * T_0 + y * T_1), where T_i is the slice with first index i.
inline mpq_class discriminant_hyperdet(const hypermat::Tensor222& t) {
  const mpq_class a00 = t.at(0, 0, 0), a01 = t.at(0, 0, 1), a10 = t.at(0, 1, 0), a11 = t.at(0, 1, 1);
  const mpq_class b00 = t.at(1, 0, 0), b01 = t.at(1, 0, 1), b10 = t.at(1, 1, 0), b11 = t.at(1, 1, 1);
  const mpq_class qa = a00 * a11 - a01 * a10;
  const mpq_class qc = b00 * b11 - b01 * b10;
  const mpq_class qb = a00 * b11 + b00 * a11 - a01 * b10 - b01 * a10;
  return qb * qb - 4 * qa * qc;
}

// Rank of the 2 x 4 flattening along `axis` from its 2 x 2 minors.
inline int flattening_rank_by_minors(const hypermat::Tensor222& t, int axis) {
  std::array<std::array<mpq_class, 4>, 2> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const int idx[3] = {i, j, k};
        const int row = idx[axis];
        int col = 0, mul = 2;
        for (int f = 2; f >= 0; --f)
          if (f != axis) {
            col += idx[f] * (mul == 2 ? 1 : 2);
            mul = 1;
          }
        m[row][col] = t.at(i, j, k);
      }
  bool any = false;
  for (const auto& row : m)
    for (const auto& x : row) any = any || x != 0;
  if (!any) return 0;
  for (int c1 = 0; c1 < 4; ++c1)
    for (int c2 = c1 + 1; c2 < 4; ++c2)
      if (m[0][c1] * m[1][c2] - m[0][c2] * m[1][c1] != 0) return 2;
  return 1;
}

// Multiplicity of S_b B (x) S_c C in S_kappa(B (x) C), from the torus weights of
// semistandard tableaux of shape kappa with entries b_j c_k (four letters).
inline std::int64_t restriction_mult(const std::vector<int>& kappa, const hypermat::Weight2& b,
                                     const hypermat::Weight2& c) {
  if (kappa.size() > 4) return 0;
  std::map<std::array<int, 4>, std::int64_t> weights;
  std::vector<std::vector<int>> tab(kappa.size());
  for (std::size_t r = 0; r < kappa.size(); ++r) tab[r].assign(kappa[r], 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int col) {
    if (r == kappa.size()) {
      std::array<int, 4> w{};
      for (const auto& row : tab)
        for (int v : row) {
          ++w[v >> 1];
          ++w[2 + (v & 1)];
        }
      ++weights[w];
      return;
    }
    if (col == kappa[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = col > 0 ? tab[r][col - 1] : 0;
    if (r > 0) lo = std::max(lo, tab[r - 1][col] + 1);
    for (int v = lo; v < 4; ++v) {
      tab[r][col] = v;
      fill(r, col + 1);
    }
  };
  fill(0, 0);
  std::int64_t total = 0;
  for (int s = 0; s < 4; ++s) {
    const int sb = s & 1, sc = (s >> 1) & 1;
    const std::array<int, 4> w{static_cast<int>(b.a) + sb, static_cast<int>(b.b) - sb, static_cast<int>(c.a) + sc,
                               static_cast<int>(c.b) - sc};
    auto it = weights.find(w);
    if (it != weights.end()) total += ((sb + sc) % 2 ? -1 : 1) * it->second;
  }
  return total;
}

}  // namespace oracle
