#include "hh/slalg.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hh/errors.hpp"

namespace hh::bmod {

SlAlgebra::SlAlgebra(int m) : m_(m), sys_(m) {
  int N = num_roots();
  mats_.assign(dim(), std::vector<int>(m * m, 0));
  for (int k = 0; k < N; ++k) {
    auto r = sys_.positive_roots()[k];
    int row = m - r.a, col = m - r.b - 1;  // 0-based position of f_beta
    mats_[f_index(k)][row * m + col] = 1;
    mats_[e_index(k)][col * m + row] = 1;
  }
  for (int i = 1; i < m; ++i) {
    int p = m - i - 1;
    mats_[h_index(i)][p * m + p] = 1;
    mats_[h_index(i)][(p + 1) * m + p + 1] = -1;
  }
  br_.resize(dim() * dim());
  std::vector<int> c(m * m);
  for (int x = 0; x < dim(); ++x)
    for (int y = 0; y < dim(); ++y) {
      const auto& a = mats_[x];
      const auto& b = mats_[y];
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          int v = 0;
          for (int t = 0; t < m; ++t) v += a[r * m + t] * b[t * m + s] - b[r * m + t] * a[t * m + s];
          c[r * m + s] = v;
        }
      br_[x * dim() + y] = decompose(c);
    }
}

SlAlgebra::Kind SlAlgebra::kind(int x) const {
  if (x < num_roots()) return Kind::E;
  if (x < num_roots() + m_ - 1) return Kind::H;
  return Kind::F;
}

int SlAlgebra::root_of(int x) const {
  switch (kind(x)) {
    case Kind::E: return x;
    case Kind::F: return x - num_roots() - m_ + 1;
    default: return -1;
  }
}

std::string SlAlgebra::label(int x) const {
  switch (kind(x)) {
    case Kind::E: return "e" + std::to_string(x + 1);
    case Kind::F: return "f" + std::to_string(root_of(x) + 1);
    default: return "h" + std::to_string(x - num_roots() + 1);
  }
}

roots::Weight SlAlgebra::weight(int x) const {
  switch (kind(x)) {
    case Kind::E: return sys_.root_weight(sys_.positive_roots()[x]);
    case Kind::F: return -sys_.root_weight(sys_.positive_roots()[root_of(x)]);
    default: return sys_.zero();
  }
}

SlAlgebra::Combination SlAlgebra::decompose(const std::vector<int>& mat) const {
  Combination out;
  int m = m_;
  int tr = 0;
  for (int q = 0; q < m; ++q) tr += mat[q * m + q];
  if (tr != 0) throw InvalidArgument("matrix is not traceless");
  for (int k = 0; k < num_roots(); ++k) {
    auto r = sys_.positive_roots()[k];
    int row = m - r.a, col = m - r.b - 1;
    if (int v = mat[col * m + row]) out.push_back({e_index(k), v});
  }
  for (int i = 1; i < m; ++i) {
    int a = 0;
    for (int q = 0; q <= m - i - 1; ++q) a += mat[q * m + q];
    if (a) out.push_back({h_index(i), a});
  }
  for (int k = 0; k < num_roots(); ++k) {
    auto r = sys_.positive_roots()[k];
    int row = m - r.a, col = m - r.b - 1;
    if (int v = mat[row * m + col]) out.push_back({f_index(k), v});
  }
  return out;
}

int SlAlgebra::root_index_of_weight(const roots::Weight& w) const {
  for (int k = 0; k < num_roots(); ++k)
    if (sys_.root_weight(sys_.positive_roots()[k]) == w) return k;
  return -1;
}

const SlAlgebra& sl(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SlAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& p = cache[m];
  if (!p) p = std::make_unique<SlAlgebra>(m);
  return *p;
}

}  // namespace hh::bmod
