#include "hh/springer.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <mutex>

#include "hh/errors.hpp"

namespace hh::springer {

using bmod::SlAlgebra;
using exactla::Entry;
using exactla::Index;

namespace {

int below(std::uint32_t mask, int bit) { return std::popcount(mask & ((1u << bit) - 1u)); }

Rational parity(int k) { return (k % 2) ? Rational(-1) : Rational(1); }

void accumulate(Term& t, const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::mutex mono_mutex;

}  // namespace

Context::Context(int m) : m_(m) {
  const SlAlgebra& g = bmod::sl(m);
  N_ = g.num_roots();
  D_ = g.dim();
  if (D_ > 32) throw UnsupportedRank("g-slot masks need dim g <= 32");
  for (int x = 0; x < D_; ++x) wt_g_.push_back(g.weight(x));
  for (int b = 0; b < N_; ++b) {
    wt_n_.push_back(g.weight(g.f_index(b)));
    wt_u_.push_back(g.weight(g.e_index(b)));
  }
  ad_.resize(D_);
  for (int x = 0; x < D_; ++x) {
    if (g.kind(x) == SlAlgebra::Kind::E) continue;
    for (int b = 0; b < N_; ++b)
      for (const auto& [y, c] : g.bracket(x, g.f_index(b))) {
        if (g.kind(y) != SlAlgebra::Kind::F) throw InvalidArgument("ad(b) left n");
        ad_[x].emplace_back(b, g.root_of(y), c);
      }
  }
}

Weight Context::weight(const Key& k) const {
  Weight w = Weight::zero(m_);
  for (int b = 0; b < N_; ++b)
    if (k.mono[b]) w += static_cast<int>(k.mono[b]) * wt_u_[b];
  for (int x = 0; x < D_; ++x)
    if (k.g >> x & 1u) w += wt_g_[x];
  for (int b = 0; b < N_; ++b)
    if (k.n >> b & 1u) w += wt_n_[b];
  return w;
}

int Context::exterior_degree(const Key& k) const { return std::popcount(k.g) + std::popcount(k.n); }

int Context::r_of(const Key& k) const {
  int p = 0;
  for (auto e : k.mono) p += e;
  return std::popcount(k.n) - p;
}

bool Context::is_free(const Key& k) const { return (k.g >> N_) == 0; }

std::string Context::label(const Key& k) const {
  const SlAlgebra& g = bmod::sl(m_);
  std::string mono;
  for (int b = 0; b < N_; ++b) {
    if (!k.mono[b]) continue;
    if (!mono.empty()) mono += "·";
    mono += "e" + std::to_string(b + 1);
    if (k.mono[b] > 1) mono += "^" + std::to_string(k.mono[b]);
  }
  std::string w;
  for (int x = 0; x < D_; ++x)
    if (k.g >> x & 1u) {
      if (!w.empty()) w += "∧";
      std::string l = g.label(x);
      w += l.substr(0, 1) + "̄" + l.substr(1);
    }
  for (int b = 0; b < N_; ++b)
    if (k.n >> b & 1u) {
      if (!w.empty()) w += "∧";
      w += "f" + std::to_string(b + 1);
    }
  if (w.empty()) w = "1";
  return mono.empty() ? w : mono + " ⊗ " + w;
}

void Context::add_g(Term& out, const Key& k, int old_x, int new_x, const Rational& c) const {
  std::uint32_t rest = k.g & ~(1u << old_x);
  if (rest >> new_x & 1u) return;
  Key nk = k;
  nk.g = rest | (1u << new_x);
  accumulate(out, nk, c * parity(below(k.g, old_x) + below(rest, new_x)));
}

Term Context::lower_ambient(int i, const Key& k) const {
  const SlAlgebra& g = bmod::sl(m_);
  int fi = g.f_index(g.simple(i));
  Term out;
  for (int b = 0; b < N_; ++b) {
    if (!k.mono[b]) continue;
    for (const auto& [y, c] : g.bracket(fi, g.e_index(b))) {
      if (g.kind(y) != SlAlgebra::Kind::E) continue;  // projected away in g/b
      Key nk = k;
      nk.mono[b]--;
      nk.mono[g.root_of(y)]++;
      accumulate(out, nk, c * Rational(k.mono[b]));
    }
  }
  for (int x = 0; x < D_; ++x)
    if (k.g >> x & 1u)
      for (const auto& [y, c] : g.bracket(fi, x)) add_g(out, k, x, y, c);
  for (int b = 0; b < N_; ++b)
    if (k.n >> b & 1u)
      for (const auto& [y, c] : g.bracket(fi, g.f_index(b))) {
        int d = g.root_of(y);
        std::uint32_t rest = k.n & ~(1u << b);
        if (rest >> d & 1u) continue;
        Key nk = k;
        nk.n = rest | (1u << d);
        accumulate(out, nk, c * parity(below(k.n, b) + below(rest, d)));
      }
  return out;
}

Term Context::project(const Term& t) const {
  Term out;
  std::vector<std::pair<Key, Rational>> work(t.begin(), t.end());
  while (!work.empty()) {
    auto [k, c] = std::move(work.back());
    work.pop_back();
    std::uint32_t bpart = k.g >> N_;
    if (!bpart) {
      accumulate(out, k, c);
      continue;
    }
    int x = N_ + std::countr_zero(bpart);
    int a = std::popcount(k.g);
    std::uint32_t rest = k.g & ~(1u << x);
    // x ^ T' = -ad(x) ^ T' in the quotient
    Rational base = -c * parity(below(k.g, x) + a - 1);
    for (const auto& [beta, gamma, cc] : ad_[x]) {
      if (k.n >> gamma & 1u) continue;
      Key nk = k;
      nk.g = rest;
      nk.mono[beta]++;
      nk.n = k.n | (1u << gamma);
      work.emplace_back(nk, base * cc * parity(below(k.n, gamma)));
    }
  }
  return out;
}

Term Context::delta_wedge(int x, const Key& t) const {
  Term out;
  if (!(t.g >> x & 1u)) {
    Key nk = t;
    nk.g |= 1u << x;
    accumulate(out, nk, parity(below(t.g, x)));
  }
  int a = std::popcount(t.g);
  for (const auto& [beta, gamma, c] : ad_[x]) {
    if (t.n >> gamma & 1u) continue;
    Key nk = t;
    nk.mono[beta]++;
    nk.n |= 1u << gamma;
    accumulate(out, nk, c * parity(a + below(t.n, gamma)));
  }
  return out;
}

const std::vector<std::vector<std::uint8_t>>& Context::monomials(int p, const Weight& w) const {
  std::lock_guard<std::mutex> lock(mono_mutex);
  if (!mono_done_[p]) {
    std::vector<std::uint8_t> cur(N_, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == N_ - 1) {
        cur[pos] = static_cast<std::uint8_t>(left);
        Key k{cur, 0, 0};
        mono_cache_[{p, weight(k)}].push_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        cur[pos] = static_cast<std::uint8_t>(e);
        self(self, pos + 1, left - e);
      }
    };
    if (p >= 0) rec(rec, 0, p);
    mono_done_[p] = true;
  }
  static const std::vector<std::vector<std::uint8_t>> none;
  auto it = mono_cache_.find({p, w});
  return it == mono_cache_.end() ? none : it->second;
}

namespace {

std::vector<std::uint32_t> subsets(int n, int size, std::uint32_t allowed_shift = 0) {
  std::vector<std::uint32_t> out;
  if (size < 0 || size > n) return out;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) == size) out.push_back(s << allowed_shift);
  return out;
}

}  // namespace

std::vector<Key> Context::free_basis(int k, int r) const {
  std::vector<Key> out;
  for (int b = 0; b <= std::min(k, N_); ++b) {
    int a = k - b, p = b - r;
    if (a > N_ || p < 0) continue;
    for (auto I : subsets(N_, a))
      for (auto J : subsets(N_, b)) {
        // all monomials of degree p regardless of weight
        std::vector<std::uint8_t> cur(N_, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
          if (pos == N_ - 1) {
            cur[pos] = static_cast<std::uint8_t>(left);
            out.push_back(Key{cur, I, J});
            return;
          }
          for (int e = left; e >= 0; --e) {
            cur[pos] = static_cast<std::uint8_t>(e);
            self(self, pos + 1, left - e);
          }
        };
        rec(rec, 0, p);
      }
  }
  return out;
}

std::vector<Key> Context::ambient_basis(int k, int r, const Weight& mu) const {
  std::vector<Key> out;
  for (int b = 0; b <= std::min(k, N_); ++b) {
    int a = k - b, p = b - r;
    if (a > D_ || p < 0) continue;
    for (auto G : subsets(D_, a))
      for (auto J : subsets(N_, b)) {
        Key base{std::vector<std::uint8_t>(N_, 0), G, J};
        for (const auto& mono : monomials(p, mu - weight(base))) out.push_back(Key{mono, G, J});
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Context& context(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Context>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& p = cache[m];
  if (!p) p = std::make_unique<Context>(m);
  return *p;
}

namespace {

void check_range(int m, int k, int r) {
  int n = context(m).num_roots();
  if (k < 0 || k > 2 * n) throw InvalidArgument("exterior degree " + std::to_string(k) + " out of range");
  (void)r;
}

void check_window(int m, const std::optional<std::set<Weight>>& window) {
  if (!window) return;
  if (window->empty()) throw WindowNotClosed("empty window");
  for (const auto& w : *window)
    if (static_cast<int>(w.size()) != m - 1) throw WindowNotClosed("weight " + w.str() + " has wrong rank");
}

}  // namespace

std::vector<Key> ambient_component(int m, int k, int r, const Weight& mu) {
  check_range(m, k, r);
  return context(m).ambient_basis(k, r, mu);
}

std::vector<SparseVector> delta_subspace(int m, int k, int r, const Weight& mu) {
  check_range(m, k, r);
  const auto& C = context(m);
  const auto& g = bmod::sl(m);
  std::vector<SparseVector> out;
  if (k == 0) return out;
  auto amb = C.ambient_basis(k, r, mu);
  std::map<Key, Index> pos;
  for (std::size_t q = 0; q < amb.size(); ++q) pos[amb[q]] = static_cast<Index>(q);
  for (int x = 0; x < g.dim(); ++x) {
    if (g.kind(x) == SlAlgebra::Kind::E) continue;
    for (const auto& T : C.ambient_basis(k - 1, r, mu - g.weight(x))) {
      std::vector<Entry> e;
      for (const auto& [key, c] : C.delta_wedge(x, T)) e.push_back({pos.at(key), c});
      auto v = SparseVector::from_entries(std::move(e));
      if (!v.empty()) out.push_back(std::move(v));
    }
  }
  return out;
}

VkComponent build_vk_component(int m, int k, int r, std::optional<std::set<Weight>> window) {
  check_range(m, k, r);
  check_window(m, window);
  const auto& C = context(m);
  auto keys = C.free_basis(k, r);
  std::vector<std::pair<Weight, Key>> kw;
  for (auto& key : keys) {
    Weight w = C.weight(key);
    if (window && !window->count(w)) continue;
    kw.emplace_back(std::move(w), std::move(key));
  }
  std::stable_sort(kw.begin(), kw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  VkComponent V;
  V.k = k;
  V.r = r;
  V.window = window;
  bmod::ModuleBuilder b(m, "V(" + std::to_string(k) + "," + std::to_string(r) + ")");
  std::map<Key, std::size_t> pos;
  for (const auto& [w, key] : kw) {
    pos[key] = b.add(C.label(key), w);
    V.keys.push_back(key);
  }
  const auto& sys = bmod::sl(m).roots();
  for (const auto& [w, key] : kw)
    for (int i = 1; i < m; ++i) {
      if (window && !window->count(w - sys.simple_root(i))) continue;
      for (const auto& [img, c] : C.lower_free(i, key)) {
        auto it = pos.find(img);
        if (it == pos.end()) throw InvalidArgument("image " + C.label(img) + " outside the component");
        b.add_lower(i, pos[key], it->second, c);
      }
    }
  if (window) b.set_window(*window);
  V.module = b.build();
  return V;
}

BModule build_vk_by_elimination(int m, int k, int r, std::optional<std::set<Weight>> window) {
  check_range(m, k, r);
  check_window(m, window);
  const auto& C = context(m);
  const auto& g = bmod::sl(m);
  const auto& sys = g.roots();
  std::vector<Key> keys;
  if (window) {
    for (const auto& w : *window) {
      auto part = C.ambient_basis(k, r, w);
      keys.insert(keys.end(), part.begin(), part.end());
    }
  } else {
    std::set<Weight> all;
    int n = C.num_roots();
    for (int b = 0; b <= std::min(k, n); ++b) {
      int a = k - b, p = b - r;
      if (a > g.dim() || p < 0) continue;
      for (auto G : subsets(g.dim(), a))
        for (auto J : subsets(n, b)) {
          Weight base = C.weight(Key{std::vector<std::uint8_t>(n, 0), G, J});
          // every monomial weight of degree p
          std::vector<std::uint8_t> cur(n, 0);
          auto rec = [&](auto&& self, int q, int left) -> void {
            if (q == n - 1) {
              cur[q] = static_cast<std::uint8_t>(left);
              all.insert(base + C.weight(Key{cur, 0, 0}));
              return;
            }
            for (int e = left; e >= 0; --e) {
              cur[q] = static_cast<std::uint8_t>(e);
              self(self, q + 1, left - e);
            }
          };
          rec(rec, 0, p);
        }
    }
    for (const auto& w : all) {
      auto part = C.ambient_basis(k, r, w);
      keys.insert(keys.end(), part.begin(), part.end());
    }
  }
  bmod::ModuleBuilder b(m, "ambient(" + std::to_string(k) + "," + std::to_string(r) + ")");
  std::map<Key, std::size_t> pos;
  std::vector<Weight> wts;
  for (const auto& key : keys) {
    wts.push_back(C.weight(key));
    pos[key] = b.add(C.label(key), wts.back());
  }
  for (std::size_t q = 0; q < keys.size(); ++q)
    for (int i = 1; i < m; ++i) {
      if (window && !window->count(wts[q] - sys.simple_root(i))) continue;
      for (const auto& [img, c] : C.lower_ambient(i, keys[q])) b.add_lower(i, q, pos.at(img), c);
    }
  if (window) b.set_window(*window);
  BModule amb = b.build();
  // key -> index in the weight-sorted module
  std::map<Key, Index> built;
  {
    std::vector<std::size_t> order(keys.size());
    for (std::size_t q = 0; q < keys.size(); ++q) order[q] = q;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return wts[a] < wts[c]; });
    for (std::size_t q = 0; q < order.size(); ++q) built[keys[order[q]]] = static_cast<Index>(q);
  }
  std::vector<SparseVector> gens;
  std::set<Weight> weights(wts.begin(), wts.end());
  if (k > 0)
    for (const auto& mu : weights)
      for (int x = 0; x < g.dim(); ++x) {
        if (g.kind(x) == SlAlgebra::Kind::E) continue;
        for (const auto& T : C.ambient_basis(k - 1, r, mu - g.weight(x))) {
          std::vector<Entry> e;
          for (const auto& [key, c] : C.delta_wedge(x, T)) e.push_back({built.at(key), c});
          auto v = SparseVector::from_entries(std::move(e));
          if (!v.empty()) gens.push_back(std::move(v));
        }
      }
  return bmod::quotient(amb, gens);
}

SparseVector trivial_summand_witness(int m) {
  if (m < 2 || m > 4) throw UnsupportedRank("witness supported for m = 2, 3, 4");
  auto V = build_vk_component(m, 2, 1);
  const auto& M = V.module;
  const auto& sys = bmod::sl(m).roots();
  Weight zero = sys.zero();
  auto src = M.space(zero);
  std::vector<SparseVector> rows(src.size());
  std::vector<exactla::Triplet> trip;
  Index row_off = 0;
  for (int i = 1; i < m; ++i) {
    auto dst = M.space(zero - sys.simple_root(i));
    auto A = bmod::apply_lowering_polynomial(M, bmod::LoweringPolynomial(std::vector<bmod::LoweringPolynomial::Term>{{Rational(1), std::vector<int>{i}}}), zero);
    for (std::size_t r = 0; r < A.rows(); ++r)
      for (const auto& e : A.row(r).entries()) trip.push_back(exactla::Triplet{row_off + static_cast<Index>(r), e.idx, e.val});
    row_off += static_cast<Index>(dst.size());
  }
  auto stacked = exactla::SparseMatrix::from_triplets(row_off, src.size(), trip);
  auto ker = exactla::kernel_basis(stacked);
  if (ker.size() != 1)
    throw WitnessNotInvariant("zero-weight b-invariants of V_2^{-2} have dimension " + std::to_string(ker.size()));
  // normalize on e1-bar ^ f1
  Key anchor{std::vector<std::uint8_t>(sys.num_positive_roots(), 0), 1u << 0, 1u << 0};
  std::size_t anchor_idx = src.end;
  for (std::size_t q = src.begin; q < src.end; ++q)
    if (V.keys[q] == anchor) anchor_idx = q;
  Rational c = ker[0].at(static_cast<Index>(anchor_idx - src.begin));
  if (c.is_zero()) throw WitnessNotInvariant("invariant has no e1-bar^f1 component");
  std::vector<Entry> e;
  for (const auto& x : ker[0].entries()) e.push_back({static_cast<Index>(x.idx + src.begin), x.val / c});
  auto z = SparseVector::from_entries(std::move(e));
  for (int i = 1; i < m; ++i)
    if (!M.act_lower(i, z).empty()) throw WitnessNotInvariant("f" + std::to_string(i) + " does not kill the witness");
  return z;
}

std::pair<int, int> duality_partner(int m, int k, int r) {
  int n = m * (m - 1) / 2;
  if (k < 0 || k > 2 * n) throw InvalidArgument("exterior degree out of range");
  return {2 * n - k, n + r - k};
}

}  // namespace hh::springer
