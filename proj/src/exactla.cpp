#include "hh/exactla.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>

#include "hh/errors.hpp"

namespace hh::exactla {

SparseVector SparseVector::from_entries(std::vector<Entry> raw) {
  std::sort(raw.begin(), raw.end(), [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
  SparseVector v;
  for (auto& e : raw) {
    if (!v.e_.empty() && v.e_.back().idx == e.idx) {
      v.e_.back().val += e.val;
      if (v.e_.back().val.is_zero()) v.e_.pop_back();
    } else if (!e.val.is_zero()) {
      v.e_.push_back(std::move(e));
    }
  }
  return v;
}

SparseVector SparseVector::unit(Index i, Rational v) {
  SparseVector s;
  if (!v.is_zero()) s.e_.push_back({i, std::move(v)});
  return s;
}

Rational SparseVector::at(Index i) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& e, Index k) { return e.idx < k; });
  if (it != e_.end() && it->idx == i) return it->val;
  return 0;
}

void SparseVector::axpy(const Rational& c, const SparseVector& x) {
  if (c.is_zero() || x.e_.empty()) return;
  std::vector<Entry> out;
  out.reserve(e_.size() + x.e_.size());
  auto a = e_.begin();
  auto b = x.e_.begin();
  while (a != e_.end() || b != x.e_.end()) {
    if (b == x.e_.end() || (a != e_.end() && a->idx < b->idx)) {
      out.push_back(std::move(*a++));
    } else if (a == e_.end() || b->idx < a->idx) {
      out.push_back({b->idx, c * b->val});
      ++b;
    } else {
      a->val.addmul(c, b->val);
      if (!a->val.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  e_ = std::move(out);
}

void SparseVector::scale(const Rational& c) {
  if (c.is_zero()) {
    e_.clear();
    return;
  }
  for (auto& e : e_) e.val *= c;
}

std::string SparseVector::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < e_.size(); ++k) os << (k ? ", " : "") << e_[k].idx << ":" << e_[k].val;
  os << "}";
  return os.str();
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : nrows_(rows), ncols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& t) {
  std::vector<std::vector<Entry>> raw(rows);
  for (const auto& x : t) {
    if (x.row >= rows || x.col >= cols) throw InvalidArgument("triplet index out of bounds");
    raw[x.row].push_back({x.col, x.val});
  }
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.rows_[r] = SparseVector::from_entries(std::move(raw[r]));
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
  SparseMatrix m(rows.size(), cols);
  for (auto& r : rows)
    if (!r.empty() && r.entries().back().idx >= cols) throw InvalidArgument("row entry out of bounds");
  m.rows_ = std::move(rows);
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& cols) {
  std::vector<std::vector<Entry>> raw(rows);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& e : cols[c].entries()) {
      if (e.idx >= rows) throw InvalidArgument("column entry out of bounds");
      raw[e.idx].push_back({static_cast<Index>(c), e.val});
    }
  SparseMatrix m(rows, cols.size());
  for (std::size_t r = 0; r < rows; ++r) m.rows_[r] = SparseVector::from_entries(std::move(raw[r]));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& d) {
  std::size_t cols = d.empty() ? 0 : d[0].size();
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < d[r].size(); ++c)
      if (!d[r][c].is_zero()) t.push_back({static_cast<Index>(r), static_cast<Index>(c), d[r][c]});
  return from_triplets(d.size(), cols, t);
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVector::unit(static_cast<Index>(i));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nnz();
  return n;
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const { return rows_.at(r).at(static_cast<Index>(c)); }

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(ncols_, nrows_);
  for (std::size_t r = 0; r < nrows_; ++r)
    for (const auto& e : rows_[r].entries()) t.rows_[e.idx].push_back(static_cast<Index>(r), e.val);
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector out;
  for (std::size_t r = 0; r < nrows_; ++r) {
    Rational acc = 0;
    const auto& a = rows_[r].entries();
    const auto& b = x.entries();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].idx < b[j].idx) {
        ++i;
      } else if (b[j].idx < a[i].idx) {
        ++j;
      } else {
        acc.addmul(a[i].val, b[j].val);
        ++i;
        ++j;
      }
    }
    if (!acc.is_zero()) out.push_back(static_cast<Index>(r), std::move(acc));
  }
  return out;
}

std::optional<SparseMatrix::Nonzero> SparseMatrix::first_nonzero() const {
  for (std::size_t r = 0; r < nrows_; ++r)
    if (!rows_[r].empty()) return Nonzero{r, rows_[r].lead(), rows_[r].entries().front().val};
  return std::nullopt;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.ncols_ != b.nrows_) throw InvalidArgument("matrix product shape mismatch");
  SparseMatrix p(a.nrows_, b.ncols_);
  for (std::size_t r = 0; r < a.nrows_; ++r) {
    std::vector<Entry> acc;
    for (const auto& e : a.rows_[r].entries())
      for (const auto& f : b.rows_[e.idx].entries()) acc.push_back({f.idx, e.val * f.val});
    p.rows_[r] = SparseVector::from_entries(std::move(acc));
  }
  return p;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_) throw InvalidArgument("matrix sum shape mismatch");
  SparseMatrix s = a;
  for (std::size_t r = 0; r < a.nrows_; ++r) s.rows_[r].axpy(1, b.rows_[r]);
  return s;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix s = *this;
  for (auto& r : s.rows_) r.scale(c);
  return s;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
}

std::string SparseMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < nrows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < ncols_; ++c) os << (c ? " " : "") << at(r, c);
    os << "]\n";
  }
  return os.str();
}

SparseVector Echelon::reduce_impl(SparseVector v, bool full) const {
  std::size_t k = 0;
  while (k < v.nnz()) {
    Index c = v.entries()[k].idx;
    auto it = pivot_of_.find(c);
    if (it == pivot_of_.end()) {
      if (!full) return v;
      ++k;
      continue;
    }
    Rational coef = -v.entries()[k].val;
    v.axpy(coef, rows_[it->second]);
  }
  return v;
}

bool Echelon::insert(SparseVector v) {
  if (!v.empty() && v.entries().back().idx >= dim_) throw InvalidArgument("vector exceeds echelon dimension");
  v = reduce_impl(std::move(v), false);
  if (v.empty()) return false;
  Rational inv = Rational(1) / v.entries().front().val;
  v.scale(inv);
  pivot_of_[v.lead()] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

SparseVector Echelon::reduce(SparseVector v) const { return reduce_impl(std::move(v), true); }

std::vector<Index> Echelon::pivots() const {
  std::vector<Index> p;
  for (const auto& r : rows_) p.push_back(r.lead());
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseVector> Echelon::rref() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].lead() > rows_[b].lead(); });
  Echelon done(dim_);
  std::vector<SparseVector> out;
  for (std::size_t i : order) {
    // reduce the tail against rows with larger pivots, which are already reduced
    SparseVector r = rows_[i];
    SparseVector tail;
    SparseVector head = SparseVector::unit(r.lead(), 1);
    std::vector<Entry> rest(r.entries().begin() + 1, r.entries().end());
    tail = SparseVector::from_entries(std::move(rest));
    tail = done.reduce(std::move(tail));
    head.axpy(1, tail);
    done.pivot_of_[head.lead()] = done.rows_.size();
    done.rows_.push_back(head);
    out.push_back(std::move(head));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  bool use_t = m.cols() < m.rows();
  SparseMatrix src = use_t ? m.transpose() : m;
  std::vector<std::size_t> order(src.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return src.row(a).nnz() < src.row(b).nnz();
  });
  Echelon ech(src.cols());
  for (std::size_t r : order) {
    if (src.row(r).empty()) continue;
    ech.insert(src.row(r));
    if (ech.rank() == src.cols()) break;
  }
  return ech.rank();
}

std::size_t kernel_dim(const SparseMatrix& m) { return m.cols() - rank(m); }

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  Echelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) ech.insert(m.row(r));
  auto rows = ech.rref();
  std::vector<char> pivot(m.cols(), 0);
  for (const auto& r : rows) pivot[r.lead()] = 1;
  // column -> list of (pivot col, coefficient)
  std::vector<std::vector<Entry>> by_free(m.cols());
  for (const auto& r : rows)
    for (std::size_t k = 1; k < r.nnz(); ++k) by_free[r.entries()[k].idx].push_back({r.lead(), -r.entries()[k].val});
  std::vector<SparseVector> basis;
  for (Index c = 0; c < m.cols(); ++c) {
    if (pivot[c]) continue;
    auto e = by_free[c];
    e.push_back({c, 1});
    basis.push_back(SparseVector::from_entries(std::move(e)));
  }
  return basis;
}

void CochainComplex::validate() const {
  if (maps.size() + 1 != dims.size() && !(dims.empty() && maps.empty()))
    throw NotAComplex("expected " + std::to_string(dims.size() ? dims.size() - 1 : 0) + " maps, got " +
                      std::to_string(maps.size()));
  for (std::size_t j = 0; j < maps.size(); ++j)
    if (maps[j].rows() != dims[j + 1] || maps[j].cols() != dims[j])
      throw NotAComplex("map " + std::to_string(j) + " has shape " + std::to_string(maps[j].rows()) + "x" +
                        std::to_string(maps[j].cols()));
  for (std::size_t j = 0; j + 1 < maps.size(); ++j) {
    auto nz = (maps[j + 1] * maps[j]).first_nonzero();
    if (nz)
      throw NotAComplex("d" + std::to_string(j + 1) + "*d" + std::to_string(j) + " has entry " + nz->val.str() +
                        " at (" + std::to_string(nz->row) + "," + std::to_string(nz->col) + ")");
  }
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c, int jobs) {
  c.validate();
  std::vector<std::size_t> ranks(c.maps.size());
  if (jobs > 1 && c.maps.size() > 1) {
    std::vector<std::future<std::size_t>> fut;
    for (const auto& m : c.maps) fut.push_back(std::async(std::launch::async, [&m] { return rank(m); }));
    for (std::size_t j = 0; j < fut.size(); ++j) ranks[j] = fut[j].get();
  } else {
    for (std::size_t j = 0; j < c.maps.size(); ++j) ranks[j] = rank(c.maps[j]);
  }
  std::vector<std::size_t> h(c.dims.size());
  long euler_terms = 0, euler_h = 0;
  for (std::size_t j = 0; j < c.dims.size(); ++j) {
    std::size_t out = j < ranks.size() ? ranks[j] : 0;
    std::size_t in = j > 0 ? ranks[j - 1] : 0;
    if (out + in > c.dims[j]) throw NotAComplex("rank sum exceeds dimension in degree " + std::to_string(j));
    h[j] = c.dims[j] - out - in;
    long sgn = (j % 2) ? -1 : 1;
    euler_terms += sgn * static_cast<long>(c.dims[j]);
    euler_h += sgn * static_cast<long>(h[j]);
  }
  if (euler_terms != euler_h) throw NotAComplex("Euler characteristic mismatch");
  return h;
}

}  // namespace hh::exactla
