#pragma once
// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

// Dense Gaussian elimination over Q.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0, rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c] == 0) continue;
      mpq_class f = a[q][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[q][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Weyl dimension formula for sl_m in fundamental coordinates: prod over i<j of (sum_{i<=t<j} (l_t+1)) / (j-i).
inline long weyl_dim(const std::vector<int>& lam) {
  int m = static_cast<int>(lam.size()) + 1;
  mpq_class d = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      long s = 0;
      for (int t = i; t < j; ++t) s += lam[t] + 1;
      d *= mpq_class(s, j - i);
    }
  d.canonicalize();
  return d.get_num().get_si();
}

// Length generating function of S_m by counting inversions.
inline std::vector<long> inversion_poincare(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<long> out(m * (m - 1) / 2 + 1, 0);
  do {
    int inv = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) inv += p[i] > p[j];
    ++out[inv];
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Number of Bruhat covers in S_m: pairs (w, w t) with one more inversion.
inline int bruhat_cover_count(int m) {
  auto inv = [](const std::vector<int>& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    return c;
  };
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  int edges = 0;
  do {
    int l = inv(p);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        auto q = p;
        std::swap(q[i], q[j]);
        if (inv(q) == l + 1) ++edges;
      }
  } while (std::next_permutation(p.begin(), p.end()));
  return edges;
}

// dim of the degree (k, r) piece of wedge^k over S(u) of (g-slot + n-slot), by counting free generators:
// a g-slot and b n-slot generators with k = a + b, polynomial degree p = b - r.
inline long free_count(int m, int k, int r) {
  long N = m * (m - 1) / 2, total = 0;
  for (long b = 0; b <= k; ++b) {
    long a = k - b, p = b - r;
    if (p < 0) continue;
    total += binom(N, a) * binom(N, b) * binom(p + N - 1, N - 1);
  }
  return total;
}

}  // namespace oracle
