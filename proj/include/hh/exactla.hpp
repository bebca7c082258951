#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hh/rational.hpp"

namespace hh::exactla {

using Index = std::uint32_t;

struct Entry {
  Index idx;
  Rational val;
  bool operator==(const Entry&) const = default;
};

// Sorted, zero-free sparse vector.
class SparseVector {
 public:
  SparseVector() = default;
  static SparseVector from_entries(std::vector<Entry> raw);
  static SparseVector unit(Index i, Rational v = 1);

  const std::vector<Entry>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  std::size_t nnz() const { return e_.size(); }
  Index lead() const { return e_.front().idx; }
  Rational at(Index i) const;

  // this += c * x
  void axpy(const Rational& c, const SparseVector& x);
  void scale(const Rational& c);
  // Entries must be appended with increasing index and nonzero value.
  void push_back(Index i, Rational v) { e_.push_back({i, std::move(v)}); }

  bool operator==(const SparseVector&) const = default;
  std::string str() const;

 private:
  std::vector<Entry> e_;
};

struct Triplet {
  Index row;
  Index col;
  Rational val;
};

// Immutable row-major sparse matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& t);
  static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
  static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& cols);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& d);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }
  std::size_t nnz() const;
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  Rational at(std::size_t r, std::size_t c) const;
  bool is_zero() const { return nnz() == 0; }

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& x) const;
  struct Nonzero {
    std::size_t row, col;
    Rational val;
  };
  std::optional<Nonzero> first_nonzero() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix scaled(const Rational& c) const;
  bool operator==(const SparseMatrix& o) const;
  std::string str() const;

 private:
  std::size_t nrows_ = 0, ncols_ = 0;
  std::vector<SparseVector> rows_;
};

// Incremental row echelon form over Q with unit pivots.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}
  // Returns true if v was independent of the stored rows.
  bool insert(SparseVector v);
  // Normal form of v modulo the span: no entries in pivot columns.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  bool is_pivot(Index c) const { return pivot_of_.count(c) != 0; }
  std::vector<Index> pivots() const;
  // Reduced row echelon rows, sorted by pivot column.
  std::vector<SparseVector> rref() const;

 private:
  SparseVector reduce_impl(SparseVector v, bool full) const;
  std::size_t dim_;
  std::vector<SparseVector> rows_;
  std::unordered_map<Index, std::size_t> pivot_of_;
};

std::size_t rank(const SparseMatrix& m);
std::size_t kernel_dim(const SparseMatrix& m);
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

struct CochainComplex {
  std::vector<std::size_t> dims;
  // maps[j] : term j -> term j+1, shape dims[j+1] x dims[j]
  std::vector<SparseMatrix> maps;

  // Throws NotAComplex on a shape mismatch or a nonzero composite.
  void validate() const;
};

// Cohomology dimensions; `jobs` > 1 computes the ranks concurrently.
std::vector<std::size_t> cohomology_dims(const CochainComplex& c, int jobs = 1);

}  // namespace hh::exactla
