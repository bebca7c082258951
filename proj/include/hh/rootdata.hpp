#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hh::roots {

// Integral weight in fundamental-weight coordinates.
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
  static Weight zero(int m) { return Weight(std::vector<int>(m - 1, 0)); }

  std::size_t size() const { return c.size(); }
  int operator[](std::size_t i) const { return c[i]; }
  bool is_zero() const;
  bool is_dominant() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(int k, Weight a);
  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

// Positive root alpha_a + ... + alpha_b (1-based simple indices, a <= b).
struct PositiveRoot {
  int a, b;
  int height() const { return b - a + 1; }
  bool operator==(const PositiveRoot&) const = default;
};

class WeylElement {
 public:
  WeylElement() = default;
  // perm[p] = image of position p (0-based one-line notation)
  explicit WeylElement(std::vector<int> perm);
  static WeylElement identity(int m);
  static WeylElement simple(int m, int i);
  static WeylElement from_word(int m, const std::vector<int>& word);
  static WeylElement longest(int m);

  int m() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& reduced_word() const { return word_; }
  std::string word_string() const;

  // composition: (a*b)(p) = a(b(p))
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  WeylElement inverse() const;

  Weight act(const Weight& lam) const;
  auto operator<=>(const WeylElement& o) const { return perm_ <=> o.perm_; }
  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }

 private:
  std::vector<int> perm_;
  std::vector<int> word_;
};

struct BruhatEdge {
  WeylElement source, target;
  PositiveRoot reflection_root;
};

class RootSystemA {
 public:
  explicit RootSystemA(int m);

  int m() const { return m_; }
  int rank() const { return m_ - 1; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  Weight rho() const { return Weight(std::vector<int>(m_ - 1, 1)); }
  Weight zero() const { return Weight::zero(m_); }
  Weight fundamental(int i) const;
  // alpha_i as a weight (column i of the Cartan matrix), i 1-based
  Weight simple_root(int i) const;
  Weight root_weight(const PositiveRoot& r) const;
  const std::vector<PositiveRoot>& positive_roots() const { return pos_; }
  int num_positive_roots() const { return static_cast<int>(pos_.size()); }
  // index into positive_roots(), or -1
  int root_index(const PositiveRoot& r) const;
  // simple-root coefficients of the root
  std::vector<int> root_coeffs(const PositiveRoot& r) const;
  // pairing <lam, beta^vee>
  int pair_coroot(const Weight& lam, const PositiveRoot& r) const;
  // reflection of lam in the root
  Weight reflect(const Weight& lam, const PositiveRoot& r) const;

  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  PositiveRoot transposition_root(int p, int q) const;

 private:
  int m_;
  std::vector<std::vector<int>> cartan_;
  std::vector<PositiveRoot> pos_;
  std::vector<WeylElement> weyl_;
};

Weight dot_action(const WeylElement& w, const Weight& lam);

// Bruhat covers w -> w' with l(w') = l(w)+1; max_m bounds the enumeration.
std::vector<BruhatEdge> bruhat_graph(const RootSystemA& sys, int max_m = 6);

struct BwbResult {
  bool singular = false;
  int degree = 0;
  Weight dominant;
};
BwbResult bwb_classify(const Weight& lam);

// Weyl dimension formula; throws NotDominant.
long weyl_dim(const Weight& lam);

std::vector<long> poincare_polynomial(const RootSystemA& sys);

// Dominant lam with w.lam in `weights` for some w.
std::vector<Weight> candidate_highest_weights(const RootSystemA& sys, const std::vector<Weight>& weights);

}  // namespace hh::roots
