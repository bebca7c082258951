#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hh/exactla.hpp"
#include "hh/rootdata.hpp"
#include "hh/slalg.hpp"

namespace hh::bmod {

using exactla::Entry;
using exactla::Index;
using exactla::SparseMatrix;
using exactla::SparseVector;
using roots::Weight;

// Formal combination of words in f_1..f_{m-1}. A word is written as in U(n):
// {2,1} is f2 f1, which acts on a vector by f1 first.
class LoweringPolynomial {
 public:
  struct Term {
    Rational coef;
    std::vector<int> word;
  };

  LoweringPolynomial() = default;
  explicit LoweringPolynomial(std::vector<Term> terms);
  static LoweringPolynomial one();
  static LoweringPolynomial parse(std::string_view s);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // simple-root coefficients of the total weight lowered; all terms agree
  std::vector<int> degree(int m) const;
  Weight weight(const roots::RootSystemA& sys) const;
  LoweringPolynomial reversed() const;
  LoweringPolynomial operator*(const LoweringPolynomial& o) const;
  LoweringPolynomial operator+(const LoweringPolynomial& o) const;
  LoweringPolynomial scaled(const Rational& c) const;
  bool operator==(const LoweringPolynomial& o) const;
  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Finite-dimensional weight module over b (optionally over g). Basis sorted by weight.
class BModule {
 public:
  struct Range {
    std::size_t begin = 0, end = 0;
    std::size_t size() const { return end - begin; }
  };

  int m() const { return m_; }
  std::size_t dim() const { return weights_.size(); }
  const std::string& name() const { return name_; }
  const Weight& weight(std::size_t k) const { return weights_[k]; }
  const std::string& label(std::size_t k) const { return labels_[k]; }
  bool has_raise() const { return !raise_.empty(); }
  // images of basis vectors under f_i (i is 1-based)
  const std::vector<SparseVector>& lower(int i) const { return lower_.at(i - 1); }
  const std::vector<SparseVector>& raise(int i) const { return raise_.at(i - 1); }

  Range space(const Weight& mu) const;
  std::vector<Weight> distinct_weights() const;
  std::map<Weight, std::size_t> character() const;
  const std::optional<std::set<Weight>>& window() const { return window_; }
  bool materialized(const Weight& mu) const { return !window_ || window_->count(mu); }

  SparseVector act_lower(int i, const SparseVector& v) const;
  SparseVector act_raise(int i, const SparseVector& v) const;
  // applies the word of U(n), rightmost letter first
  SparseVector act_word(const std::vector<int>& word, const SparseVector& v) const;
  SparseMatrix lower_matrix(int i) const;

  // Consistency checks; each throws InvalidArgument describing the failure.
  void check_weights() const;
  void check_serre() const;
  void check_commutation() const;

  std::string describe(const SparseVector& v) const;

 private:
  friend class ModuleBuilder;
  int m_ = 0;
  std::string name_;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVector>> lower_, raise_;
  std::optional<std::set<Weight>> window_;
  std::map<Weight, Range> ranges_;
};

class ModuleBuilder {
 public:
  ModuleBuilder(int m, std::string name, bool with_raise = false);
  std::size_t add(std::string label, Weight w);
  std::size_t size() const { return weights_.size(); }
  void add_lower(int i, std::size_t col, std::size_t row, const Rational& v);
  void add_raise(int i, std::size_t col, std::size_t row, const Rational& v);
  void set_window(std::set<Weight> w) { window_ = std::move(w); }
  BModule build();

 private:
  int m_;
  std::string name_;
  bool raise_;
  std::vector<Weight> weights_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::vector<Entry>>> lower_, raise_v_;
  std::optional<std::set<Weight>> window_;
};

BModule trivial(int m);
BModule natural(int m);
BModule adjoint_g(int m);
BModule sub_b(int m);
BModule sub_n(int m);
BModule quotient_u(int m);

BModule tensor(const BModule& a, const BModule& b);
BModule wedge(const BModule& a, int k);
BModule sym(const BModule& a, int p);
BModule direct_sum(const BModule& a, const BModule& b);
BModule dual(const BModule& a);

// Quotient by the span of weight-homogeneous generators.
class Quotient {
 public:
  Quotient(const BModule& ambient, const std::vector<SparseVector>& gens);
  const BModule& module() const { return module_; }
  // image of an ambient vector in quotient coordinates
  SparseVector project(const SparseVector& v) const;
  std::size_t relation_rank() const { return ech_.rank(); }

 private:
  exactla::Echelon ech_;
  std::vector<long> qindex_;
  BModule module_;
};

BModule quotient(const BModule& a, const std::vector<SparseVector>& gens);

// Coordinate submodule spanned by the given basis indices; throws NotSubmodule if not f-stable.
BModule coordinate_submodule(const BModule& a, const std::vector<std::size_t>& idx, std::string name);

BModule irreducible_module(const Weight& lam, std::size_t budget = 20000);

// Matrix A[mu] -> A[mu - weight(p)] in local coordinates of the weight spaces.
SparseMatrix apply_lowering_polynomial(const BModule& a, const LoweringPolynomial& p, const Weight& mu);

}  // namespace hh::bmod
