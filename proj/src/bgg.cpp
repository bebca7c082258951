#include "hh/bgg.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "bgg_tables.hpp"
#include "hh/errors.hpp"
#include "hh/springer.hpp"

namespace hh::bgg {

namespace {

WeylElement node(int m, const std::string& word) {
  std::vector<int> w;
  if (word != "e")
    for (char c : word) w.push_back(c - '0');
  auto x = WeylElement::from_word(m, w);
  if (x.length() != static_cast<int>(w.size())) throw InvalidArgument("node " + word + " is not a reduced word");
  return x;
}

LoweringPolynomial power_of(int i, int e) {
  return LoweringPolynomial(std::vector<LoweringPolynomial::Term>{{Rational(1), std::vector<int>(static_cast<std::size_t>(e), i)}});
}

}  // namespace

BGGData bgg_data(int m, const Weight& lam, Dualization conv) {
  if (m < 2 || m > 4) throw UnsupportedRank("BGG differentials are tabulated for m = 2, 3, 4 only");
  if (static_cast<int>(lam.size()) != m - 1) throw InvalidArgument("weight has wrong rank");
  if (!lam.is_dominant()) throw UnsupportedWeight("BGG data needs a dominant weight, got " + lam.str());
  BGGData d;
  d.m = m;
  d.lam = lam;
  roots::RootSystemA sys(m);
  d.nodes = sys.weyl_group();
  if (lam.is_zero()) {
    for (const auto& c : detail::table(m)) {
      auto p = LoweringPolynomial::parse(c.poly);
      if (conv == Dualization::Reversed) p = p.reversed();
      d.arrows.push_back({node(m, c.row), node(m, c.col), p});
    }
    d.complete = true;
  } else {
    // only the arrows out of the identity are known in general
    for (int i = 1; i < m; ++i)
      d.arrows.push_back({WeylElement::identity(m), WeylElement::simple(m, i), power_of(i, lam[i - 1] + 1)});
    d.complete = (m == 2);
  }
  check_bgg_data(d);
  return d;
}

void check_bgg_data(const BGGData& d) {
  roots::RootSystemA sys(d.m);
  auto edges = roots::bruhat_graph(sys);
  std::set<std::pair<WeylElement, WeylElement>> cover;
  for (const auto& e : edges) cover.insert({e.source, e.target});
  std::set<std::pair<WeylElement, WeylElement>> seen;
  for (const auto& a : d.arrows) {
    std::string tag = a.source.word_string() + " -> " + a.target.word_string();
    if (!cover.count({a.source, a.target})) throw InvalidArgument("arrow " + tag + " is not a Bruhat cover");
    if (!seen.insert({a.source, a.target}).second) throw InvalidArgument("duplicate arrow " + tag);
    Weight drop = roots::dot_action(a.source, d.lam) - roots::dot_action(a.target, d.lam);
    if (a.poly.weight(sys) != drop)
      throw InvalidArgument("arrow " + tag + " carries " + a.poly.str() + " of weight " + a.poly.weight(sys).str() +
                            ", expected " + drop.str());
  }
  if (d.complete && seen.size() != cover.size()) throw InvalidArgument("arrows do not cover the Bruhat graph");
}

std::set<Weight> required_window(const BGGData& d) {
  roots::RootSystemA sys(d.m);
  std::set<Weight> w;
  for (const auto& x : d.nodes) w.insert(roots::dot_action(x, d.lam));
  for (const auto& a : d.arrows) {
    Weight start = roots::dot_action(a.source, d.lam);
    for (const auto& t : a.poly.terms()) {
      Weight cur = start;
      for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
        cur -= sys.simple_root(*it);
        w.insert(cur);
      }
    }
  }
  return w;
}

exactla::CochainComplex bgg_cochain(const BModule& E, const BGGData& d) {
  if (E.m() != d.m) throw InvalidArgument("module and BGG data disagree on m");
  int N = d.m * (d.m - 1) / 2;
  exactla::CochainComplex c;
  c.dims.assign(N + 1, 0);
  std::map<WeylElement, std::size_t> offset;
  std::map<WeylElement, Weight> wt;
  for (const auto& x : d.nodes) {
    Weight mu = roots::dot_action(x, d.lam);
    if (!E.materialized(mu)) throw MissingWeightSpace("node weight " + mu.str() + " of " + x.word_string());
    wt[x] = mu;
    offset[x] = c.dims[x.length()];
    c.dims[x.length()] += E.space(mu).size();
  }
  std::vector<std::vector<exactla::Triplet>> trip(N);
  for (const auto& a : d.arrows) {
    int j = a.source.length();
    if (E.space(wt[a.source]).size() == 0 || E.space(wt[a.target]).size() == 0) {
      // still insist the path weights exist
      bmod::apply_lowering_polynomial(E, a.poly, wt[a.source]);
      continue;
    }
    auto blk = bmod::apply_lowering_polynomial(E, a.poly, wt[a.source]);
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (const auto& e : blk.row(r).entries())
        trip[j].push_back({static_cast<exactla::Index>(offset[a.target] + r),
                           static_cast<exactla::Index>(offset[a.source] + e.idx), e.val});
  }
  for (int j = 0; j < N; ++j) c.maps.push_back(exactla::SparseMatrix::from_triplets(c.dims[j + 1], c.dims[j], trip[j]));
  c.validate();
  return c;
}

MultiplicityProfile multiplicity(const BModule& E, const Weight& lam, int jobs) {
  int m = E.m();
  MultiplicityProfile p;
  p.lam = lam;
  auto d = bgg_data(m, lam);
  bool usable = d.complete;
  if (!usable) {
    // the partial data suffices when every missing arrow touches a zero term
    usable = true;
    std::set<std::pair<WeylElement, WeylElement>> have;
    for (const auto& a : d.arrows) have.insert({a.source, a.target});
    for (const auto& e : roots::bruhat_graph(roots::RootSystemA(m))) {
      if (have.count({e.source, e.target})) continue;
      if (E.space(roots::dot_action(e.source, lam)).size() && E.space(roots::dot_action(e.target, lam)).size()) {
        usable = false;
        break;
      }
    }
  }
  if (usable) {
    p.dims = exactla::cohomology_dims(bgg_cochain(E, d), jobs);
    p.route = d.complete ? "bgg" : "bgg-partial";
    return p;
  }
  // Hom_G(L_lam, H(E)) = H(E (x) L_lam^*)^G
  auto F = bmod::tensor(E, bmod::dual(bmod::irreducible_module(lam)));
  p.dims = exactla::cohomology_dims(bgg_cochain(F, bgg_data(m)), jobs);
  p.route = "bgg-tensor";
  return p;
}

long HodgeDiamond::total() const {
  long t = 0;
  for (const auto& [ij, h] : entries) t += h;
  return t;
}

long HodgeDiamond::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::vector<long>> HodgeDiamond::rows() const {
  std::vector<std::vector<long>> out;
  for (int t = 0; t <= n(); ++t) {
    std::vector<long> row;
    for (int c = 0; c <= t; ++c) row.push_back(at(t - c, t + c));
    out.push_back(row);
  }
  return out;
}

std::vector<std::pair<int, int>> diamond_positions(int m) {
  int n = m * (m - 1) / 2;
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t <= n; ++t)
    for (int c = 0; c <= t; ++c) out.push_back({t - c, t + c});
  return out;
}

long hodge_entry(int m, int i, int j, EntryLog* log) {
  int n = m * (m - 1) / 2;
  if ((i + j) % 2) throw OddParity("i + j = " + std::to_string(i + j));
  if (i < 0 || i > n || j < 0 || j > 2 * n || i + j > 2 * n)
    throw InvalidArgument("(" + std::to_string(i) + "," + std::to_string(j) + ") outside the diamond");
  auto t0 = std::chrono::steady_clock::now();
  int r = (i + j) / 2;
  auto d = bgg_data(m);
  auto window = required_window(d);
  auto V = springer::build_vk_component(m, j, r, window);
  auto c = bgg_cochain(V.module, d);
  auto h = exactla::cohomology_dims(c);
  if (log) {
    log->i = i;
    log->j = j;
    log->k = j;
    log->r = r;
    log->window_weights = window.size();
    log->term_dims = c.dims;
    log->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log->mirrored = false;
  }
  return static_cast<long>(h[i]);
}

HodgeDiamond hodge_diamond(int m, const DiamondOptions& opt) {
  if (m < 2 || m > 4) throw UnsupportedRank("diamond available for m = 2, 3, 4");
  HodgeDiamond D;
  D.m = m;
  int n = D.n();
  std::vector<std::pair<int, int>> direct, mirrored;
  for (auto ij : diamond_positions(m)) (opt.mirror && ij.second > n ? mirrored : direct).push_back(ij);
  std::vector<long> vals(direct.size());
  std::atomic<std::size_t> next{0};
  std::mutex log_mu;
  auto worker = [&] {
    for (std::size_t q; (q = next++) < direct.size();) {
      EntryLog lg{};
      vals[q] = hodge_entry(m, direct[q].first, direct[q].second, &lg);
      if (opt.log) {
        std::lock_guard<std::mutex> lock(log_mu);
        opt.log(lg);
      }
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        try {
          worker();
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          next = direct.size();
        }
      });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  for (std::size_t q = 0; q < direct.size(); ++q) D.entries[direct[q]] = vals[q];
  for (auto [i, j] : mirrored) {
    D.entries[{i, j}] = D.entries.at({i, 2 * n - j});
    if (opt.log) {
      EntryLog lg{i, j, j, (i + j) / 2, 0, {}, 0.0, true};
      opt.log(lg);
    }
  }
  return D;
}

}  // namespace hh::bgg
