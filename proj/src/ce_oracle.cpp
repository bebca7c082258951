#include "hh/ce_oracle.hpp"

#include <bit>

#include "hh/errors.hpp"
#include "hh/slalg.hpp"

namespace hh::ce {

using exactla::Entry;
using exactla::Index;
using exactla::SparseVector;

std::vector<std::vector<SparseVector>> root_actions(const BModule& F) {
  const auto& g = bmod::sl(F.m());
  const auto& roots = g.roots().positive_roots();
  std::vector<std::vector<SparseVector>> act(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    auto r = roots[k];
    if (r.a == r.b) {
      act[k] = F.lower(r.a);
      continue;
    }
    // f_beta = [f_a, f_beta'] / c with beta' = beta - alpha_a
    int rest = g.roots().root_index({r.a + 1, r.b});
    Rational c = 0;
    for (const auto& [y, v] : g.bracket(g.f_index(g.simple(r.a)), g.f_index(rest)))
      if (y == g.f_index(static_cast<int>(k))) c = v;
    if (c.is_zero()) throw InvalidArgument("root vector not reached by a commutator");
    const auto& fa = F.lower(r.a);
    const auto& fb = act[rest];
    auto apply = [&](const std::vector<SparseVector>& op, const SparseVector& v) {
      std::vector<Entry> acc;
      for (const auto& e : v.entries())
        for (const auto& x : op[e.idx].entries()) acc.push_back({x.idx, e.val * x.val});
      return SparseVector::from_entries(std::move(acc));
    };
    act[k].resize(F.dim());
    Rational inv = Rational(1) / c;
    for (std::size_t q = 0; q < F.dim(); ++q) {
      SparseVector v = apply(fa, fb[q]);
      v.axpy(-1, apply(fb, fa[q]));
      v.scale(inv);
      act[k][q] = std::move(v);
    }
  }
  return act;
}

exactla::CochainComplex ce_complex(const BModule& F) {
  if (F.window()) throw InvalidArgument("CE complex needs a fully materialized module");
  const auto& g = bmod::sl(F.m());
  const auto& sys = g.roots();
  int N = g.num_roots();
  auto act = root_actions(F);
  std::vector<Weight> rw;
  for (const auto& r : sys.positive_roots()) rw.push_back(sys.root_weight(r));
  // structure constants [f_a, f_b] = c f_gamma for a < b
  struct Br {
    int a, b;
    Rational c;
  };
  std::vector<std::vector<Br>> into(N);
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      for (const auto& [y, c] : g.bracket(g.f_index(a), g.f_index(b))) into[g.root_of(y)].push_back({a, b, c});

  // basis of C^p: (subset S, vector of F at weight -sum S)
  std::vector<std::map<std::uint32_t, std::size_t>> offset(N + 1);
  exactla::CochainComplex cx;
  cx.dims.assign(N + 1, 0);
  auto weight_of = [&](std::uint32_t S) {
    Weight w = sys.zero();
    for (int b = 0; b < N; ++b)
      if (S >> b & 1u) w -= rw[b];
    return w;
  };
  for (std::uint32_t S = 0; S < (1u << N); ++S) {
    int p = std::popcount(S);
    auto sp = F.space(weight_of(S));
    if (!sp.size()) continue;
    offset[p][S] = cx.dims[p];
    cx.dims[p] += sp.size();
  }
  auto below = [](std::uint32_t mask, int bit) { return std::popcount(mask & ((1u << bit) - 1u)); };
  auto sgn = [](int k) { return (k % 2) ? Rational(-1) : Rational(1); };
  for (int p = 0; p < N; ++p) {
    std::vector<exactla::Triplet> trip;
    for (const auto& [S, off] : offset[p]) {
      auto sp = F.space(weight_of(S));
      for (std::size_t q = 0; q < sp.size(); ++q) {
        Index col = static_cast<Index>(off + q);
        std::size_t v = sp.begin + q;
        for (int t = 0; t < N; ++t) {
          if (S >> t & 1u) continue;
          std::uint32_t T = S | (1u << t);
          auto it = offset[p + 1].find(T);
          if (it == offset[p + 1].end()) continue;
          auto tsp = F.space(weight_of(T));
          Rational s = sgn(below(T, t));
          for (const auto& e : act[t][v].entries())
            trip.push_back({static_cast<Index>(it->second + e.idx - tsp.begin), col, s * e.val});
        }
        for (int gm = 0; gm < N; ++gm) {
          if (!(S >> gm & 1u)) continue;
          std::uint32_t R = S & ~(1u << gm);
          for (const auto& br : into[gm]) {
            if ((R >> br.a & 1u) || (R >> br.b & 1u)) continue;
            std::uint32_t T = R | (1u << br.a) | (1u << br.b);
            auto it = offset[p + 1].find(T);
            if (it == offset[p + 1].end()) continue;
            auto tsp = F.space(weight_of(T));
            // T has the same weight as S, so v keeps its position inside the weight space
            Rational s = sgn(below(T, br.a) + below(T, br.b) + below(S, gm)) * br.c;
            trip.push_back({static_cast<Index>(it->second + (v - tsp.begin)), col, s});
          }
        }
      }
    }
    cx.maps.push_back(exactla::SparseMatrix::from_triplets(cx.dims[p + 1], cx.dims[p], trip));
  }
  return cx;
}

std::vector<std::size_t> ce_cohomology(const BModule& E, const Weight& lam, std::size_t budget, int jobs) {
  long wd = roots::weyl_dim(lam);
  if (E.dim() * static_cast<std::size_t>(wd) > budget)
    throw BudgetExceeded("CE for L" + lam.str() + ": " + std::to_string(E.dim()) + " x " + std::to_string(wd) +
                         " exceeds budget " + std::to_string(budget));
  if (lam.is_zero()) return exactla::cohomology_dims(ce_complex(E), jobs);
  auto F = bmod::tensor(E, bmod::dual(bmod::irreducible_module(lam, budget)));
  return exactla::cohomology_dims(ce_complex(F), jobs);
}

std::map<Weight, std::vector<std::size_t>> full_decomposition(const BModule& E, std::size_t budget, int jobs) {
  std::vector<Weight> wts;
  for (std::size_t k = 0; k < E.dim(); ++k) wts.push_back(E.weight(k));
  std::map<Weight, std::vector<std::size_t>> out;
  for (const auto& lam : roots::candidate_highest_weights(bmod::sl(E.m()).roots(), wts)) {
    try {
      out[lam] = ce_cohomology(E, lam, budget, jobs);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded("full decomposition at L" + lam.str() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace hh::ce
