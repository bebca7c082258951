#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hh/rational.hpp"
#include "hh/rootdata.hpp"

namespace hh::bmod {

// sl_m realized by matrix units: f_i = E_{m-i+1, m-i}, e_i its transpose (1-based rows/cols),
// h_i = [e_i, f_i]. Basis order: e_beta (positive roots), h_1..h_{m-1}, f_beta.
class SlAlgebra {
 public:
  enum class Kind { E, H, F };
  using Combination = std::vector<std::pair<int, Rational>>;

  explicit SlAlgebra(int m);

  int m() const { return m_; }
  const roots::RootSystemA& roots() const { return sys_; }
  int dim() const { return m_ * m_ - 1; }
  int num_roots() const { return sys_.num_positive_roots(); }
  int e_index(int beta) const { return beta; }
  int h_index(int i) const { return num_roots() + i - 1; }
  int f_index(int beta) const { return num_roots() + m_ - 1 + beta; }
  // root index of the simple root alpha_i
  int simple(int i) const { return i - 1; }
  Kind kind(int x) const;
  int root_of(int x) const;
  std::string label(int x) const;
  roots::Weight weight(int x) const;

  // m x m integer matrix of basis element x, row-major
  const std::vector<int>& matrix(int x) const { return mats_[x]; }
  // [x, y] in the basis
  const Combination& bracket(int x, int y) const { return br_[x * dim() + y]; }
  Combination decompose(const std::vector<int>& mat) const;
  // root index of beta - alpha or beta + alpha style lookups via brackets: returns -1 if absent
  int root_index_of_weight(const roots::Weight& w) const;

 private:
  int m_;
  roots::RootSystemA sys_;
  std::vector<std::vector<int>> mats_;
  std::vector<Combination> br_;
};

// Shared instance per m.
const SlAlgebra& sl(int m);

}  // namespace hh::bmod
