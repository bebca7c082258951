#include "hh/bmodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hh/errors.hpp"

namespace hh::bmod {

namespace {

SparseVector combine(std::vector<Entry> acc) { return SparseVector::from_entries(std::move(acc)); }

Weight alpha(int m, int i) { return sl(m).roots().simple_root(i); }

}  // namespace

// ---------------------------------------------------------------- BModule

BModule::Range BModule::space(const Weight& mu) const {
  auto it = ranges_.find(mu);
  if (it == ranges_.end()) return {};
  return it->second;
}

std::vector<Weight> BModule::distinct_weights() const {
  std::vector<Weight> w;
  for (const auto& [mu, r] : ranges_) w.push_back(mu);
  return w;
}

std::map<Weight, std::size_t> BModule::character() const {
  std::map<Weight, std::size_t> c;
  for (const auto& [mu, r] : ranges_) c[mu] = r.size();
  return c;
}

SparseVector BModule::act_lower(int i, const SparseVector& v) const {
  std::vector<Entry> acc;
  const auto& f = lower(i);
  for (const auto& e : v.entries()) {
    if (window_) {
      Weight t = weights_[e.idx] - alpha(m_, i);
      if (!window_->count(t)) throw MissingWeightSpace("weight " + t.str() + " not materialized in " + name_);
    }
    for (const auto& x : f[e.idx].entries()) acc.push_back({x.idx, e.val * x.val});
  }
  return combine(std::move(acc));
}

SparseVector BModule::act_raise(int i, const SparseVector& v) const {
  if (!has_raise()) throw InvalidArgument("module " + name_ + " carries no raising operators");
  std::vector<Entry> acc;
  const auto& f = raise(i);
  for (const auto& e : v.entries())
    for (const auto& x : f[e.idx].entries()) acc.push_back({x.idx, e.val * x.val});
  return combine(std::move(acc));
}

SparseVector BModule::act_word(const std::vector<int>& word, const SparseVector& v) const {
  SparseVector r = v;
  for (auto it = word.rbegin(); it != word.rend() && !r.empty(); ++it) r = act_lower(*it, r);
  return r;
}

SparseMatrix BModule::lower_matrix(int i) const { return SparseMatrix::from_columns(dim(), lower(i)); }

std::string BModule::describe(const SparseVector& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : v.entries()) {
    if (!first) os << " + ";
    first = false;
    if (e.val != 1) os << e.val << "*";
    os << labels_[e.idx];
  }
  return os.str();
}

void BModule::check_weights() const {
  for (int i = 1; i < m_; ++i) {
    Weight a = alpha(m_, i);
    for (std::size_t k = 0; k < dim(); ++k) {
      for (const auto& e : lower_[i - 1][k].entries())
        if (weights_[e.idx] != weights_[k] - a)
          throw InvalidArgument(name_ + ": f" + std::to_string(i) + " maps " + labels_[k] + " off weight");
      if (has_raise())
        for (const auto& e : raise_[i - 1][k].entries())
          if (weights_[e.idx] != weights_[k] + a)
            throw InvalidArgument(name_ + ": e" + std::to_string(i) + " maps " + labels_[k] + " off weight");
    }
  }
}

void BModule::check_serre() const {
  auto zero_on = [&](std::size_t k, const std::vector<std::pair<Rational, std::vector<int>>>& rel) {
    try {
      std::vector<Entry> acc;
      SparseVector v = SparseVector::unit(static_cast<Index>(k));
      for (const auto& [c, w] : rel) {
        SparseVector img = act_word(w, v);
        for (const auto& e : img.entries()) acc.push_back({e.idx, c * e.val});
      }
      return combine(std::move(acc)).empty();
    } catch (const MissingWeightSpace&) {
      return true;  // relation not testable inside the window
    }
  };
  for (int i = 1; i < m_; ++i)
    for (int j = 1; j < m_; ++j) {
      if (i == j) continue;
      std::vector<std::pair<Rational, std::vector<int>>> rel;
      if (std::abs(i - j) == 1)
        rel = {{1, {i, i, j}}, {-2, {i, j, i}}, {1, {j, i, i}}};
      else
        rel = {{1, {i, j}}, {-1, {j, i}}};
      for (std::size_t k = 0; k < dim(); ++k)
        if (!zero_on(k, rel))
          throw InvalidArgument(name_ + ": Serre relation for (" + std::to_string(i) + "," + std::to_string(j) +
                                ") fails on " + labels_[k]);
    }
}

void BModule::check_commutation() const {
  if (!has_raise()) return;
  for (int i = 1; i < m_; ++i)
    for (int j = 1; j < m_; ++j)
      for (std::size_t k = 0; k < dim(); ++k) {
        SparseVector v = SparseVector::unit(static_cast<Index>(k));
        SparseVector c = act_raise(i, act_lower(j, v));
        c.axpy(-1, act_lower(j, act_raise(i, v)));
        SparseVector expect;
        if (i == j) expect = SparseVector::unit(static_cast<Index>(k), weights_[k][i - 1]);
        if (!(c == expect))
          throw InvalidArgument(name_ + ": [e" + std::to_string(i) + ",f" + std::to_string(j) + "] wrong on " +
                                labels_[k]);
      }
}

// ---------------------------------------------------------------- builder

ModuleBuilder::ModuleBuilder(int m, std::string name, bool with_raise)
    : m_(m), name_(std::move(name)), raise_(with_raise), lower_(m - 1), raise_v_(with_raise ? m - 1 : 0) {}

std::size_t ModuleBuilder::add(std::string label, Weight w) {
  weights_.push_back(std::move(w));
  labels_.push_back(std::move(label));
  for (auto& g : lower_) g.emplace_back();
  for (auto& g : raise_v_) g.emplace_back();
  return weights_.size() - 1;
}

void ModuleBuilder::add_lower(int i, std::size_t col, std::size_t row, const Rational& v) {
  if (!v.is_zero()) lower_.at(i - 1).at(col).push_back({static_cast<Index>(row), v});
}

void ModuleBuilder::add_raise(int i, std::size_t col, std::size_t row, const Rational& v) {
  if (!v.is_zero()) raise_v_.at(i - 1).at(col).push_back({static_cast<Index>(row), v});
}

BModule ModuleBuilder::build() {
  std::size_t n = weights_.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weights_[a] < weights_[b]; });
  std::vector<Index> newpos(n);
  for (std::size_t k = 0; k < n; ++k) newpos[order[k]] = static_cast<Index>(k);
  BModule M;
  M.m_ = m_;
  M.name_ = name_;
  M.window_ = window_;
  for (std::size_t k = 0; k < n; ++k) {
    M.weights_.push_back(weights_[order[k]]);
    M.labels_.push_back(labels_[order[k]]);
  }
  auto remap = [&](std::vector<std::vector<std::vector<Entry>>>& src) {
    std::vector<std::vector<SparseVector>> out(src.size(), std::vector<SparseVector>(n));
    for (std::size_t g = 0; g < src.size(); ++g)
      for (std::size_t k = 0; k < n; ++k) {
        auto e = std::move(src[g][order[k]]);
        for (auto& x : e) x.idx = newpos[x.idx];
        out[g][k] = combine(std::move(e));
      }
    return out;
  };
  M.lower_ = remap(lower_);
  if (raise_) M.raise_ = remap(raise_v_);
  for (std::size_t k = 0; k < n;) {
    std::size_t j = k;
    while (j < n && M.weights_[j] == M.weights_[k]) ++j;
    M.ranges_[M.weights_[k]] = {k, j};
    k = j;
  }
  if (M.window_)
    for (const auto& w : M.weights_)
      if (!M.window_->count(w)) throw WindowNotClosed("basis weight " + w.str() + " outside window of " + name_);
  M.check_weights();
  return M;
}

// ---------------------------------------------------------------- constructors

BModule trivial(int m) {
  ModuleBuilder b(m, "trivial", true);
  b.add("1", Weight::zero(m));
  return b.build();
}

BModule natural(int m) {
  const auto& sys = sl(m).roots();
  ModuleBuilder b(m, "natural", true);
  for (int p = 0; p < m; ++p) {
    Weight w = sys.zero();
    for (int i = 1; i < m; ++i) w.c[i - 1] = (p == m - i - 1 ? 1 : 0) - (p == m - i ? 1 : 0);
    b.add("v" + std::to_string(p + 1), w);
  }
  for (int i = 1; i < m; ++i) {
    b.add_lower(i, m - i - 1, m - i, 1);
    b.add_raise(i, m - i, m - i - 1, 1);
  }
  return b.build();
}

BModule adjoint_g(int m) {
  const auto& g = sl(m);
  ModuleBuilder b(m, "g", true);
  for (int x = 0; x < g.dim(); ++x) b.add(g.label(x), g.weight(x));
  for (int i = 1; i < m; ++i) {
    int f = g.f_index(g.simple(i)), e = g.e_index(g.simple(i));
    for (int x = 0; x < g.dim(); ++x) {
      for (const auto& [y, c] : g.bracket(f, x)) b.add_lower(i, x, y, c);
      for (const auto& [y, c] : g.bracket(e, x)) b.add_raise(i, x, y, c);
    }
  }
  return b.build();
}

BModule coordinate_submodule(const BModule& a, const std::vector<std::size_t>& idx, std::string name) {
  std::vector<long> pos(a.dim(), -1);
  ModuleBuilder b(a.m(), std::move(name));
  for (std::size_t k : idx) pos[k] = static_cast<long>(b.add(a.label(k), a.weight(k)));
  for (int i = 1; i < a.m(); ++i)
    for (std::size_t k : idx)
      for (const auto& e : a.lower(i)[k].entries()) {
        if (pos[e.idx] < 0)
          throw NotSubmodule("f" + std::to_string(i) + " maps " + a.label(k) + " to " + a.label(e.idx) +
                             " outside the span");
        b.add_lower(i, pos[k], pos[e.idx], e.val);
      }
  if (a.window()) b.set_window(*a.window());
  return b.build();
}

namespace {

std::vector<std::size_t> select(const BModule& a, const std::string& first_chars) {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (first_chars.find(a.label(k)[0]) != std::string::npos) idx.push_back(k);
  return idx;
}

}  // namespace

BModule sub_b(int m) {
  auto g = adjoint_g(m);
  return coordinate_submodule(g, select(g, "hf"), "b");
}

BModule sub_n(int m) {
  auto g = adjoint_g(m);
  return coordinate_submodule(g, select(g, "f"), "n");
}

BModule quotient_u(int m) {
  auto g = adjoint_g(m);
  std::vector<SparseVector> gens;
  for (std::size_t k : select(g, "hf")) gens.push_back(SparseVector::unit(static_cast<Index>(k)));
  Quotient q(g, gens);
  auto M = q.module();
  return M;
}

namespace {

std::string paren(const std::string& s) {
  return s.find_first_of(" ⊗∧+") == std::string::npos ? s : "(" + s + ")";
}

void require_full(const BModule& a, const char* what) {
  if (a.window()) throw InvalidArgument(std::string(what) + " needs a fully materialized module: " + a.name());
}

}  // namespace

BModule tensor(const BModule& a, const BModule& b) {
  require_full(a, "tensor");
  require_full(b, "tensor");
  if (a.m() != b.m()) throw InvalidArgument("tensor of modules for different m");
  bool r = a.has_raise() && b.has_raise();
  ModuleBuilder t(a.m(), paren(a.name()) + " ⊗ " + paren(b.name()), r);
  std::size_t db = b.dim();
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < db; ++y) t.add(paren(a.label(x)) + "⊗" + paren(b.label(y)), a.weight(x) + b.weight(y));
  for (int i = 1; i < a.m(); ++i)
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < db; ++y) {
        std::size_t col = x * db + y;
        for (const auto& e : a.lower(i)[x].entries()) t.add_lower(i, col, e.idx * db + y, e.val);
        for (const auto& e : b.lower(i)[y].entries()) t.add_lower(i, col, x * db + e.idx, e.val);
        if (r) {
          for (const auto& e : a.raise(i)[x].entries()) t.add_raise(i, col, e.idx * db + y, e.val);
          for (const auto& e : b.raise(i)[y].entries()) t.add_raise(i, col, x * db + e.idx, e.val);
        }
      }
  return t.build();
}

namespace {

// Shared engine for wedge and sym: basis = sorted index tuples.
BModule power(const BModule& a, int k, bool alternating) {
  require_full(a, alternating ? "wedge" : "sym");
  if (k < 0) throw InvalidArgument("negative power");
  int m = a.m();
  std::size_t n = a.dim();
  std::vector<std::vector<Index>> tuples;
  std::vector<Index> cur;
  auto rec = [&](auto&& self, Index start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      tuples.push_back(cur);
      return;
    }
    for (Index x = start; x < n; ++x) {
      cur.push_back(x);
      self(self, alternating ? x + 1 : x);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::map<std::vector<Index>, std::size_t> pos;
  std::string nm = std::string(alternating ? "wedge^" : "sym^") + std::to_string(k) + "(" + a.name() + ")";
  ModuleBuilder b(m, nm, a.has_raise());
  for (const auto& t : tuples) {
    Weight w = Weight::zero(m);
    std::string label;
    for (std::size_t q = 0; q < t.size(); ++q) {
      w += a.weight(t[q]);
      label += (q ? (alternating ? "∧" : "·") : "") + paren(a.label(t[q]));
    }
    if (t.empty()) label = "1";
    pos[t] = b.add(label, w);
  }
  auto act = [&](int i, bool up) {
    for (const auto& t : tuples) {
      std::size_t col = pos[t];
      for (std::size_t q = 0; q < t.size(); ++q) {
        const auto& img = up ? a.raise(i)[t[q]] : a.lower(i)[t[q]];
        for (const auto& e : img.entries()) {
          std::vector<Index> s = t;
          s.erase(s.begin() + q);
          if (alternating && std::find(s.begin(), s.end(), e.idx) != s.end()) continue;
          auto it = std::lower_bound(s.begin(), s.end(), e.idx);
          std::size_t target = it - s.begin();
          s.insert(it, e.idx);
          Rational v = e.val;
          if (alternating && ((q > target ? q - target : target - q) % 2)) v = -v;
          if (up)
            b.add_raise(i, col, pos.at(s), v);
          else
            b.add_lower(i, col, pos.at(s), v);
        }
      }
    }
  };
  for (int i = 1; i < m; ++i) {
    act(i, false);
    if (a.has_raise()) act(i, true);
  }
  return b.build();
}

}  // namespace

BModule wedge(const BModule& a, int k) {
  if (k > static_cast<int>(a.dim())) throw InvalidArgument("wedge degree exceeds dimension");
  return power(a, k, true);
}

BModule sym(const BModule& a, int p) { return power(a, p, false); }

BModule direct_sum(const BModule& a, const BModule& b) {
  require_full(a, "direct_sum");
  require_full(b, "direct_sum");
  bool r = a.has_raise() && b.has_raise();
  ModuleBuilder s(a.m(), paren(a.name()) + " ⊕ " + paren(b.name()), r);
  for (std::size_t x = 0; x < a.dim(); ++x) s.add(a.label(x), a.weight(x));
  for (std::size_t y = 0; y < b.dim(); ++y) s.add(b.label(y), b.weight(y));
  std::size_t off = a.dim();
  for (int i = 1; i < a.m(); ++i) {
    for (std::size_t x = 0; x < a.dim(); ++x) {
      for (const auto& e : a.lower(i)[x].entries()) s.add_lower(i, x, e.idx, e.val);
      if (r)
        for (const auto& e : a.raise(i)[x].entries()) s.add_raise(i, x, e.idx, e.val);
    }
    for (std::size_t y = 0; y < b.dim(); ++y) {
      for (const auto& e : b.lower(i)[y].entries()) s.add_lower(i, off + y, off + e.idx, e.val);
      if (r)
        for (const auto& e : b.raise(i)[y].entries()) s.add_raise(i, off + y, off + e.idx, e.val);
    }
  }
  return s.build();
}

BModule dual(const BModule& a) {
  require_full(a, "dual");
  ModuleBuilder d(a.m(), "dual(" + a.name() + ")", a.has_raise());
  for (std::size_t x = 0; x < a.dim(); ++x) d.add(paren(a.label(x)) + "*", -a.weight(x));
  // (f.xi_k)(v_j) = -xi_k(f v_j): column j of f contributes to row k
  for (int i = 1; i < a.m(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (const auto& e : a.lower(i)[j].entries()) d.add_lower(i, e.idx, j, -e.val);
      if (a.has_raise())
        for (const auto& e : a.raise(i)[j].entries()) d.add_raise(i, e.idx, j, -e.val);
    }
  return d.build();
}

// ---------------------------------------------------------------- quotient

Quotient::Quotient(const BModule& a, const std::vector<SparseVector>& gens) : ech_(a.dim()) {
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& v = gens[g];
    for (const auto& e : v.entries())
      if (a.weight(e.idx) != a.weight(v.lead()))
        throw NotSubmodule("generator " + std::to_string(g) + " is not weight-homogeneous: " + a.describe(v));
    ech_.insert(v);
  }
  auto escapes = [&](const SparseVector& img) { return !ech_.reduce(img).empty(); };
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].empty()) continue;
    for (int i = 1; i < a.m(); ++i) {
      Weight t = a.weight(gens[g].lead()) - alpha(a.m(), i);
      if (!a.materialized(t)) continue;
      if (escapes(a.act_lower(i, gens[g])))
        throw NotSubmodule("f" + std::to_string(i) + " applied to generator " + std::to_string(g) + " (" +
                           a.describe(gens[g]) + ") leaves the span");
    }
  }
  bool keep_raise = a.has_raise();
  if (keep_raise)
    for (std::size_t g = 0; g < gens.size() && keep_raise; ++g)
      for (int i = 1; i < a.m() && keep_raise; ++i)
        if (!gens[g].empty() && escapes(a.act_raise(i, gens[g]))) keep_raise = false;

  ModuleBuilder b(a.m(), a.name() + "/<" + std::to_string(ech_.rank()) + " relations>", keep_raise);
  qindex_.assign(a.dim(), -1);
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!ech_.is_pivot(static_cast<Index>(k))) qindex_[k] = static_cast<long>(b.add(a.label(k), a.weight(k)));
  for (int i = 1; i < a.m(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (qindex_[k] < 0) continue;
      Weight t = a.weight(k) - alpha(a.m(), i);
      if (!a.materialized(t)) continue;
      SparseVector img = project(a.lower(i)[k]);
      for (const auto& e : img.entries()) b.add_lower(i, qindex_[k], e.idx, e.val);
      if (keep_raise) {
        SparseVector up = project(a.raise(i)[k]);
        for (const auto& e : up.entries()) b.add_raise(i, qindex_[k], e.idx, e.val);
      }
    }
  if (a.window()) b.set_window(*a.window());
  module_ = b.build();
}

SparseVector Quotient::project(const SparseVector& v) const {
  SparseVector r = ech_.reduce(v);
  std::vector<Entry> out;
  for (const auto& e : r.entries()) out.push_back({static_cast<Index>(qindex_[e.idx]), e.val});
  return SparseVector::from_entries(std::move(out));
}

BModule quotient(const BModule& a, const std::vector<SparseVector>& gens) { return Quotient(a, gens).module(); }

// ---------------------------------------------------------------- irreducibles

BModule irreducible_module(const Weight& lam, std::size_t budget) {
  if (!lam.is_dominant()) throw NotDominant(lam.str());
  int m = static_cast<int>(lam.size()) + 1;
  if (lam.is_zero()) return trivial(m);
  long wd = roots::weyl_dim(lam);
  if (static_cast<std::size_t>(wd) > budget)
    throw BudgetExceeded("dim L" + lam.str() + " = " + std::to_string(wd) + " exceeds budget " + std::to_string(budget));
  // Lambda^{m-i} of the natural module has highest weight omega_i
  std::size_t amb = 1;
  for (int i = 1; i < m; ++i) {
    long c = 1;
    for (int t = 0; t < m - i; ++t) c = c * (m - t) / (t + 1);
    for (int k = 0; k < lam[i - 1]; ++k) amb *= static_cast<std::size_t>(c);
  }
  if (amb > 50 * budget) throw BudgetExceeded("ambient tensor power for L" + lam.str() + " too large");
  auto V = natural(m);
  std::optional<BModule> A;
  for (int i = 1; i < m; ++i) {
    if (lam[i - 1] == 0) continue;
    auto W = wedge(V, m - i);
    for (int k = 0; k < lam[i - 1]; ++k) A = A ? tensor(*A, W) : W;
  }
  auto top = A->space(lam);
  if (top.size() != 1) throw InvalidArgument("highest weight space is not one-dimensional");

  std::map<Weight, exactla::Echelon> span;
  std::vector<Weight> frontier{lam};
  span.emplace(lam, exactla::Echelon(A->dim()));
  span.at(lam).insert(SparseVector::unit(static_cast<Index>(top.begin)));
  std::map<Weight, std::vector<SparseVector>> basis;
  while (!frontier.empty()) {
    std::set<Weight> next;
    for (const auto& mu : frontier) {
      basis[mu] = span.at(mu).rref();
      for (int i = 1; i < m; ++i)
        for (const auto& v : basis[mu]) {
          SparseVector img = A->act_lower(i, v);
          if (img.empty()) continue;
          Weight t = mu - alpha(m, i);
          auto it = span.find(t);
          if (it == span.end()) it = span.emplace(t, exactla::Echelon(A->dim())).first;
          if (it->second.insert(img)) next.insert(t);
          else if (!basis.count(t)) next.insert(t);
        }
    }
    frontier.clear();
    for (const auto& t : next)
      if (!basis.count(t)) frontier.push_back(t);
  }
  ModuleBuilder b(m, "L" + lam.str(), true);
  std::map<Weight, std::size_t> offset;
  for (const auto& [mu, rows] : basis) {
    offset[mu] = b.size();
    for (std::size_t k = 0; k < rows.size(); ++k) b.add("v" + mu.str() + "_" + std::to_string(k), mu);
  }
  auto coords = [&](const Weight& mu, const SparseVector& img) {
    const auto& rows = basis.at(mu);
    SparseVector rem = img;
    std::vector<std::pair<std::size_t, Rational>> c;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      Rational x = img.at(rows[k].lead());
      if (x.is_zero()) continue;
      rem.axpy(-x, rows[k]);
      c.push_back({offset.at(mu) + k, x});
    }
    if (!rem.empty()) throw InvalidArgument("generated subspace is not stable at weight " + mu.str());
    return c;
  };
  for (const auto& [mu, rows] : basis)
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (int i = 1; i < m; ++i) {
        SparseVector lo = A->act_lower(i, rows[k]);
        if (!lo.empty())
          for (auto& [r, x] : coords(mu - alpha(m, i), lo)) b.add_lower(i, offset[mu] + k, r, x);
        SparseVector hi = A->act_raise(i, rows[k]);
        if (!hi.empty())
          for (auto& [r, x] : coords(mu + alpha(m, i), hi)) b.add_raise(i, offset[mu] + k, r, x);
      }
  auto L = b.build();
  if (static_cast<long>(L.dim()) != wd)
    throw InvalidArgument("generated module has dimension " + std::to_string(L.dim()) + ", expected " +
                          std::to_string(wd));
  return L;
}

// ---------------------------------------------------------------- polynomials

SparseMatrix apply_lowering_polynomial(const BModule& a, const LoweringPolynomial& p, const Weight& mu) {
  const auto& sys = sl(a.m()).roots();
  if (!a.materialized(mu)) throw MissingWeightSpace("source weight " + mu.str() + " in " + a.name());
  Weight target = mu - p.weight(sys);
  if (!a.materialized(target)) throw MissingWeightSpace("target weight " + target.str() + " in " + a.name());
  for (const auto& t : p.terms()) {
    Weight w = mu;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
      w -= sys.simple_root(*it);
      if (!a.materialized(w)) throw MissingWeightSpace("intermediate weight " + w.str() + " in " + a.name());
    }
  }
  auto src = a.space(mu);
  auto dst = a.space(target);
  std::vector<SparseVector> cols;
  for (std::size_t k = src.begin; k < src.end; ++k) {
    std::vector<Entry> acc;
    SparseVector v = SparseVector::unit(static_cast<Index>(k));
    for (const auto& t : p.terms()) {
      SparseVector img = a.act_word(t.word, v);
      for (const auto& e : img.entries()) {
        if (e.idx < dst.begin || e.idx >= dst.end)
          throw InvalidArgument("polynomial " + p.str() + " from " + mu.str() + " reached " + a.weight(e.idx).str() +
                                ", expected " + target.str());
        acc.push_back({static_cast<Index>(e.idx - dst.begin), t.coef * e.val});
      }
    }
    cols.push_back(SparseVector::from_entries(std::move(acc)));
  }
  return SparseMatrix::from_columns(dst.size(), cols);
}

}  // namespace hh::bmod
