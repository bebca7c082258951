#include "hh/cli/verify.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "hh/ce_oracle.hpp"
#include "hh/coinvariants.hpp"
#include "hh/errors.hpp"
#include "hh/springer.hpp"

namespace hh::cli {

namespace {

using Clock = std::chrono::steady_clock;
using roots::Weight;

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

std::string join(const std::vector<long>& v) {
  std::vector<std::size_t> w(v.begin(), v.end());
  return join(w);
}

class Runner {
 public:
  Runner(std::string suite, const CheckSink& sink) : suite_(std::move(suite)), sink_(sink) {}

  // f returns "" on success, otherwise a description of the failure
  void check(const std::string& name, const std::function<std::string()>& f) {
    Check c{suite_, name, false, "", 0};
    auto t0 = Clock::now();
    try {
      c.detail = f();
      c.ok = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (sink_) sink_(c);
    out.push_back(std::move(c));
  }

  std::vector<Check> out;

 private:
  std::string suite_;
  const CheckSink& sink_;
};

std::vector<std::size_t> bgg_profile(int m, int k, int r) {
  auto d = bgg::bgg_data(m);
  auto V = springer::build_vk_component(m, k, r, bgg::required_window(d));
  return exactla::cohomology_dims(bgg::bgg_cochain(V.module, d));
}

void suite_complex(int m, Runner& R) {
  int n = m * (m - 1) / 2;
  auto d = bgg::bgg_data(m);
  R.check("bgg data arrows are Bruhat covers of the right weight", [&] {
    bgg::check_bgg_data(d);
    return std::string();
  });
  auto window = bgg::required_window(d);
  for (int k = 0; k <= 2 * n; ++k)
    for (int r = (k + 1) / 2; r <= n; ++r) {
      if (r < 0) continue;
      R.check("d^2 = 0 on the BGG complex of V(" + std::to_string(k) + "," + std::to_string(r) + ")", [&] {
        auto V = springer::build_vk_component(m, k, r, window);
        auto c = bgg::bgg_cochain(V.module, d);  // validates d o d = 0
        c.validate();
        return std::string();
      });
    }
  if (m <= 3)
    for (int k = 0; k <= 2 * n; ++k)
      for (int r = (k + 1) / 2; r <= n; ++r)
        R.check("d^2 = 0 on the CE complex of V(" + std::to_string(k) + "," + std::to_string(r) + ")", [&] {
          ce::ce_complex(springer::build_vk_component(m, k, r).module).validate();
          return std::string();
        });
  R.check("reversed-word dualization is rejected", [&] {
    if (m < 3) return std::string();  // every sl2 arrow is a single generator
    auto dr = bgg::bgg_data(m, Weight::zero(m), bgg::Dualization::Reversed);
    auto w = bgg::required_window(dr);
    for (int k = 0; k <= 2 * n; ++k)
      for (int r = (k + 1) / 2; r <= n; ++r) try {
          bgg::bgg_cochain(springer::build_vk_component(m, k, r, w).module, dr);
        } catch (const NotAComplex&) {
          return std::string();
        }
    return std::string("reversed convention produced a complex on every component");
  });
}

void suite_duality(int m, Runner& R) {
  int n = m * (m - 1) / 2;
  auto window = bgg::required_window(bgg::bgg_data(m));
  for (int k = 0; k <= n; ++k)
    for (int r = 0; r <= 2 * n; ++r) {
      auto [k2, r2] = springer::duality_partner(m, k, r);
      if (r2 < 0 || r2 > 2 * n) continue;
      auto name = "V(" + std::to_string(k) + "," + std::to_string(r) + ") ~ V(" + std::to_string(k2) + "," +
                  std::to_string(r2) + ")";
      auto A = springer::build_vk_component(m, k, r, window).module;
      auto B = springer::build_vk_component(m, k2, r2, window).module;
      if (!A.dim() && !B.dim()) continue;
      R.check("windowed character " + name, [&] {
        if (A.character() != B.character())
          return "dims " + std::to_string(A.dim()) + " vs " + std::to_string(B.dim());
        return std::string();
      });
      R.check("L0 multiplicities " + name, [&] {
        auto d = bgg::bgg_data(m);
        auto a = exactla::cohomology_dims(bgg::bgg_cochain(A, d));
        auto b = exactla::cohomology_dims(bgg::bgg_cochain(B, d));
        return a == b ? std::string() : join(a) + " vs " + join(b);
      });
    }
}

void suite_sl2(int m, Runner& R) {
  int n = m * (m - 1) / 2;
  // H^i(wedge^{n-a})^{-2r} = H^i(wedge^{n+a})^{-2r-2a}, along each diagonal of fixed i
  for (int a = 1; a <= n; ++a)
    for (int i = 0; i <= n; ++i) {
      if ((i + n - a) % 2) continue;
      int r = (i + n - a) / 2;
      R.check("diagonal i=" + std::to_string(i) + ": V(" + std::to_string(n - a) + "," + std::to_string(r) +
                  ") vs V(" + std::to_string(n + a) + "," + std::to_string(r + a) + ")",
              [&] {
                auto x = bgg_profile(m, n - a, r);
                auto y = bgg_profile(m, n + a, r + a);
                return x == y ? std::string() : join(x) + " vs " + join(y);
              });
    }
}

std::vector<std::pair<int, int>> oracle_entries(int m) {
  if (m <= 3) return bgg::diamond_positions(m);
  return {{1, 1}, {0, 2}, {1, 3}, {2, 2}};
}

void suite_oracle(int m, Runner& R) {
  for (auto [i, j] : oracle_entries(m))
    R.check("BGG = CE at h(" + std::to_string(i) + "," + std::to_string(j) + ")", [&, i = i, j = j] {
      int r = (i + j) / 2;
      auto x = bgg_profile(m, j, r);
      auto y = ce::ce_cohomology(springer::build_vk_component(m, j, r).module, Weight::zero(m));
      return x == y ? std::string() : "bgg " + join(x) + " ce " + join(y);
    });
  if (m <= 3)
    R.check("full decompositions of V(1,0) agree", [&] {
      auto V = springer::build_vk_component(m, 1, 0).module;
      for (const auto& [lam, dims] : ce::full_decomposition(V)) {
        auto p = bgg::multiplicity(V, lam);
        if (p.dims != dims) return "at L" + lam.str() + ": bgg " + join(p.dims) + " ce " + join(dims);
      }
      return std::string();
    });
}

void suite_bwb(int m, Runner& R) {
  roots::RootSystemA sys(m);
  std::mt19937 rng(20240 + m);
  std::uniform_int_distribution<int> coord(-6, 6);
  auto rho = sys.rho();
  for (int t = 0; t < 100; ++t) {
    std::vector<int> c(m - 1);
    for (auto& x : c) x = coord(rng);
    Weight lam(c);
    R.check("random " + lam.str(), [&] {
      auto res = roots::bwb_classify(lam);
      // singular iff lam + rho is fixed by some reflection
      bool fixed = false;
      for (const auto& beta : sys.positive_roots())
        if (sys.pair_coroot(lam + rho, beta) == 0) fixed = true;
      if (fixed != res.singular) return std::string("singularity disagrees with the reflection test");
      if (res.singular) return std::string();
      int hits = 0;
      for (const auto& w : sys.weyl_group()) {
        auto mu = roots::dot_action(w, lam);
        if (mu.is_dominant()) {
          ++hits;
          if (mu != res.dominant || w.length() != res.degree) return "predicted (" + std::to_string(res.degree) + ", " +
                                                                  res.dominant.str() + ") but found " + mu.str();
        }
      }
      return hits == 1 ? std::string() : std::to_string(hits) + " dominant dot-images";
    });
  }
  for (int t = 0; t < 20; ++t) {
    std::vector<int> c(m - 1);
    for (auto& x : c) x = std::abs(coord(rng));
    Weight lam(c);
    for (const auto& w : sys.weyl_group())
      R.check("w.lam round trip for " + lam.str() + " w=" + w.word_string(), [&] {
        auto res = roots::bwb_classify(roots::dot_action(w, lam));
        if (res.singular || res.degree != w.length() || res.dominant != lam)
          return "got degree " + std::to_string(res.degree) + " weight " + res.dominant.str();
        return std::string();
      });
  }
}

void suite_structure(int m, int jobs, Runner& R) {
  int n = m * (m - 1) / 2;
  bgg::HodgeDiamond D;
  R.check("diamond assembles", [&] {
    bgg::DiamondOptions opt;
    opt.jobs = jobs;
    D = bgg::hodge_diamond(m, opt);
    return std::string();
  });
  if (D.entries.empty()) return;
  auto P = roots::poincare_polynomial(roots::RootSystemA(m));
  R.check("column j-i=0 is the Poincare polynomial", [&] {
    std::vector<long> col;
    for (int t = 0; t <= n; ++t) col.push_back(D.at(t, t));
    return col == P ? std::string() : join(col) + " vs " + join(P);
  });
  R.check("bottom row is the Poincare polynomial", [&] {
    auto rows = D.rows();
    return rows.back() == P ? std::string() : join(rows.back()) + " vs " + join(P);
  });
  R.check("diagonal h(0,2r) = 1", [&] {
    for (int r = 0; r <= n; ++r)
      if (D.at(0, 2 * r) != 1) return "h(0," + std::to_string(2 * r) + ") = " + std::to_string(D.at(0, 2 * r));
    return std::string();
  });
  R.check("coinvariant table is the Poincare polynomial", [&] {
    auto c = coinv::coinvariant_table(m);
    return c == P ? std::string() : join(c) + " vs " + join(P);
  });
  R.check("trivial-summand witness is b-invariant", [&] {
    springer::trivial_summand_witness(m);  // throws WitnessNotInvariant otherwise
    return std::string();
  });
}

}  // namespace

long ce_hodge_entry(int m, int i, int j) {
  int n = m * (m - 1) / 2;
  if ((i + j) % 2) throw OddParity("i + j = " + std::to_string(i + j));
  if (i < 0 || i > n || j < 0 || j > 2 * n || i + j > 2 * n)
    throw InvalidArgument("(" + std::to_string(i) + "," + std::to_string(j) + ") outside the diamond");
  auto V = springer::build_vk_component(m, j, (i + j) / 2).module;
  return static_cast<long>(ce::ce_cohomology(V, Weight::zero(m))[i]);
}

bgg::HodgeDiamond ce_diamond(int m, int jobs, const std::function<void(int, int, double)>& log) {
  if (m < 2 || m > 4) throw UnsupportedRank("diamond available for m = 2, 3, 4");
  auto pos = bgg::diamond_positions(m);
  std::vector<long> vals(pos.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr err;
  auto worker = [&] {
    try {
      for (std::size_t q; (q = next++) < pos.size();) {
        auto t0 = Clock::now();
        vals[q] = ce_hodge_entry(m, pos[q].first, pos[q].second);
        if (log) {
          std::lock_guard<std::mutex> lock(mu);
          log(pos[q].first, pos[q].second, std::chrono::duration<double>(Clock::now() - t0).count());
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!err) err = std::current_exception();
      next = pos.size();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  bgg::HodgeDiamond D;
  D.m = m;
  for (std::size_t q = 0; q < pos.size(); ++q) D.entries[pos[q]] = vals[q];
  return D;
}

std::vector<Check> run_suite(int m, const std::string& suite, int jobs, const CheckSink& sink) {
  if (m < 2 || m > 4) throw UnsupportedRank("verify supports m = 2, 3, 4");
  if (suite == "all") {
    std::vector<Check> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(m, s, jobs, sink);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  Runner R(suite, sink);
  if (suite == "complex")
    suite_complex(m, R);
  else if (suite == "duality")
    suite_duality(m, R);
  else if (suite == "sl2")
    suite_sl2(m, R);
  else if (suite == "oracle")
    suite_oracle(m, R);
  else if (suite == "bwb")
    suite_bwb(m, R);
  else if (suite == "structure")
    suite_structure(m, jobs, R);
  else
    throw InvalidArgument("unknown suite " + suite);
  return R.out;
}

}  // namespace hh::cli
