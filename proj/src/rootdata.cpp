#include "hh/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <gmpxx.h>
#include <set>
#include <sstream>

#include "hh/errors.hpp"

namespace hh::roots {

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Weight operator*(int k, Weight a) {
  for (auto& x : a.c) x *= k;
  return a;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : w.c) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ull;
  return h;
}

namespace {

Weight simple_reflect(const Weight& lam, int i) {
  // lam - <lam, alpha_i^vee> alpha_i; alpha_i = column i of the Cartan matrix
  Weight r = lam;
  int k = lam.c[i - 1];
  int n = static_cast<int>(lam.c.size());
  r.c[i - 1] -= 2 * k;
  if (i - 2 >= 0) r.c[i - 2] += k;
  if (i < n) r.c[i] += k;
  return r;
}

}  // namespace

WeylElement::WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
  int m = static_cast<int>(perm_.size());
  std::vector<int> w = perm_;
  std::vector<int> rev;
  for (;;) {
    int p = -1;
    for (int q = 0; q + 1 < m; ++q)
      if (w[q] > w[q + 1]) {
        p = q;
        break;
      }
    if (p < 0) break;
    std::swap(w[p], w[p + 1]);
    rev.push_back(m - 1 - p);
  }
  word_.assign(rev.rbegin(), rev.rend());
}

WeylElement WeylElement::identity(int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  return WeylElement(p);
}

WeylElement WeylElement::simple(int m, int i) {
  if (i < 1 || i > m - 1) throw InvalidArgument("simple reflection index out of range");
  std::vector<int> p(m);
  for (int k = 0; k < m; ++k) p[k] = k;
  std::swap(p[m - i - 1], p[m - i]);
  return WeylElement(p);
}

WeylElement WeylElement::from_word(int m, const std::vector<int>& word) {
  WeylElement w = identity(m);
  for (int i : word) w = w * simple(m, i);
  return w;
}

WeylElement WeylElement::longest(int m) {
  std::vector<int> p(m);
  for (int k = 0; k < m; ++k) p[k] = m - 1 - k;
  return WeylElement(p);
}

std::string WeylElement::word_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (int i : word_) s += std::to_string(i);
  return s;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::vector<int> p(a.perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = a.perm_[b.perm_[k]];
  return WeylElement(p);
}

WeylElement WeylElement::inverse() const {
  std::vector<int> p(perm_.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[perm_[k]] = static_cast<int>(k);
  return WeylElement(p);
}

Weight WeylElement::act(const Weight& lam) const {
  Weight r = lam;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) r = simple_reflect(r, *it);
  return r;
}

RootSystemA::RootSystemA(int m) : m_(m) {
  if (m < 2) throw InvalidArgument("m must be at least 2");
  int n = m - 1;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    cartan_[i][i] = 2;
    if (i + 1 < n) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
  }
  for (int h = 1; h <= n; ++h)
    for (int a = 1; a + h - 1 <= n; ++a) pos_.push_back({a, a + h - 1});
  std::vector<int> p(m);
  for (int k = 0; k < m; ++k) p[k] = k;
  do {
    weyl_.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::stable_sort(weyl_.begin(), weyl_.end(),
                   [](const WeylElement& x, const WeylElement& y) { return x.length() < y.length(); });
}

Weight RootSystemA::fundamental(int i) const {
  Weight w = zero();
  w.c.at(i - 1) = 1;
  return w;
}

Weight RootSystemA::simple_root(int i) const {
  Weight w = zero();
  for (int k = 0; k < m_ - 1; ++k) w.c[k] = cartan_[k][i - 1];
  return w;
}

Weight RootSystemA::root_weight(const PositiveRoot& r) const {
  Weight w = zero();
  for (int k = r.a; k <= r.b; ++k) w += simple_root(k);
  return w;
}

int RootSystemA::root_index(const PositiveRoot& r) const {
  for (std::size_t k = 0; k < pos_.size(); ++k)
    if (pos_[k] == r) return static_cast<int>(k);
  return -1;
}

std::vector<int> RootSystemA::root_coeffs(const PositiveRoot& r) const {
  std::vector<int> v(m_ - 1, 0);
  for (int k = r.a; k <= r.b; ++k) v[k - 1] = 1;
  return v;
}

int RootSystemA::pair_coroot(const Weight& lam, const PositiveRoot& r) const {
  int s = 0;
  for (int k = r.a; k <= r.b; ++k) s += lam.c[k - 1];
  return s;
}

Weight RootSystemA::reflect(const Weight& lam, const PositiveRoot& r) const {
  return lam - pair_coroot(lam, r) * root_weight(r);
}

PositiveRoot RootSystemA::transposition_root(int p, int q) const {
  if (p > q) std::swap(p, q);
  return {m_ - q, m_ - p - 1};
}

Weight dot_action(const WeylElement& w, const Weight& lam) {
  Weight rho(std::vector<int>(lam.size(), 1));
  return w.act(lam + rho) - rho;
}

std::vector<BruhatEdge> bruhat_graph(const RootSystemA& sys, int max_m) {
  if (sys.m() > max_m) throw RankTooLarge("m=" + std::to_string(sys.m()) + " exceeds " + std::to_string(max_m));
  int m = sys.m();
  std::vector<BruhatEdge> edges;
  for (const auto& w : sys.weyl_group())
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) {
        std::vector<int> t(m);
        for (int k = 0; k < m; ++k) t[k] = k;
        std::swap(t[p], t[q]);
        WeylElement w2 = WeylElement(t) * w;
        if (w2.length() == w.length() + 1) edges.push_back({w, w2, sys.transposition_root(p, q)});
      }
  return edges;
}

BwbResult bwb_classify(const Weight& lam) {
  Weight mu = lam;
  for (auto& x : mu.c) x += 1;
  BwbResult res;
  for (;;) {
    int neg = -1;
    for (std::size_t i = 0; i < mu.c.size(); ++i) {
      if (mu.c[i] == 0) {
        res.singular = true;
        return res;
      }
      if (mu.c[i] < 0 && neg < 0) neg = static_cast<int>(i);
    }
    if (neg < 0) break;
    mu = simple_reflect(mu, neg + 1);
    ++res.degree;
  }
  for (auto& x : mu.c) x -= 1;
  res.dominant = mu;
  return res;
}

long weyl_dim(const Weight& lam) {
  if (!lam.is_dominant()) throw NotDominant(lam.str());
  int n = static_cast<int>(lam.size());
  mpz_class num = 1, den = 1;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      long s = 0;
      for (int k = a; k <= b; ++k) s += lam.c[k - 1] + 1;
      num *= s;
      den *= (b - a + 1);
    }
  mpz_class q = num / den;
  return q.get_si();
}

std::vector<long> poincare_polynomial(const RootSystemA& sys) {
  std::vector<long> p(sys.num_positive_roots() + 1, 0);
  for (const auto& w : sys.weyl_group()) ++p[w.length()];
  return p;
}

std::vector<Weight> candidate_highest_weights(const RootSystemA& sys, const std::vector<Weight>& weights) {
  (void)sys;
  std::set<Weight> out;
  for (const auto& mu : weights) {
    auto r = bwb_classify(mu);
    if (!r.singular) out.insert(r.dominant);
  }
  return {out.begin(), out.end()};
}

}  // namespace hh::roots
