#include <doctest.h>

#include "hh/bmodule.hpp"
#include "hh/errors.hpp"
#include "hh/slalg.hpp"
#include "oracles.hpp"

using namespace hh;
using namespace hh::bmod;
using roots::Weight;

namespace {

std::size_t index_of(const BModule& M, const std::string& label) {
  for (std::size_t k = 0; k < M.dim(); ++k)
    if (M.label(k) == label) return k;
  FAIL("no basis element " << label);
  return 0;
}

std::map<Weight, std::size_t> negated(const std::map<Weight, std::size_t>& c) {
  std::map<Weight, std::size_t> out;
  for (const auto& [w, d] : c) out[-w] = d;
  return out;
}

}  // namespace

TEST_SUITE("bmodule") {
  TEST_CASE("sl brackets are matrix commutators") {
    for (int m : {2, 3, 4}) {
      const auto& g = sl(m);
      for (int x = 0; x < g.dim(); ++x)
        for (int y = 0; y < g.dim(); ++y) {
          const auto &X = g.matrix(x), &Y = g.matrix(y);
          std::vector<int> C(m * m, 0);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              for (int k = 0; k < m; ++k) C[i * m + j] += X[i * m + k] * Y[k * m + j] - Y[i * m + k] * X[k * m + j];
          std::vector<Rational> got(m * m, 0);
          for (const auto& [z, c] : g.bracket(x, y))
            for (int q = 0; q < m * m; ++q) got[q] += c * g.matrix(z)[q];
          for (int q = 0; q < m * m; ++q) CHECK(got[q] == Rational(C[q]));
        }
    }
  }

  TEST_CASE("f3 is [f1, f2] for sl3") {
    const auto& g = sl(3);
    auto br = g.bracket(g.f_index(0), g.f_index(1));
    REQUIRE(br.size() == 1);
    CHECK(g.label(br[0].first) == "f3");
    CHECK(br[0].second == Rational(1));
  }

  TEST_CASE("lowering polynomial parse and print") {
    auto p = LoweringPolynomial::parse("-2 f1 f2 + f2*f1");
    CHECK(p.str() == "-2f1f2 + f2f1");
    CHECK(LoweringPolynomial::parse(p.str()) == p);
    CHECK(LoweringPolynomial::parse("f1^2").str() == "f1^2");
    CHECK(LoweringPolynomial::parse("f1 f1") == LoweringPolynomial::parse("f1^2"));
    CHECK(p.reversed() == LoweringPolynomial::parse("-2f2f1 + f1f2"));
    CHECK_THROWS_AS(LoweringPolynomial::parse("f1 + f2"), InvalidArgument);
    roots::RootSystemA s3(3);
    CHECK(p.weight(s3) == s3.simple_root(1) + s3.simple_root(2));
  }

  TEST_CASE("standard modules pass the structural checks") {
    for (int m : {2, 3, 4}) {
      for (const auto& M : {trivial(m), natural(m), adjoint_g(m), sub_b(m), sub_n(m), quotient_u(m)}) {
        CHECK_NOTHROW(M.check_weights());
        CHECK_NOTHROW(M.check_serre());
      }
      CHECK_NOTHROW(adjoint_g(m).check_commutation());
      CHECK_NOTHROW(natural(m).check_commutation());
      CHECK(adjoint_g(m).dim() == static_cast<std::size_t>(m * m - 1));
      CHECK(quotient_u(m).dim() == static_cast<std::size_t>(m * (m - 1) / 2));
    }
  }

  TEST_CASE("u is dual to n") {
    for (int m : {2, 3, 4}) CHECK(quotient_u(m).character() == dual(sub_n(m)).character());
  }

  TEST_CASE("tensor and exterior powers") {
    auto n = sub_n(3), u = quotient_u(3);
    auto top = wedge(n, 3);
    CHECK(top.dim() == 1);
    roots::RootSystemA s3(3);
    CHECK(top.weight(0) == -(2 * s3.rho()));
    auto T = tensor(n, u);
    CHECK(T.dim() == 9);
    CHECK(T.space(s3.zero()).size() == 3);
    CHECK(sym(u, 0).dim() == 1);
    for (int k = 0; k <= 6; ++k) CHECK(static_cast<long>(wedge(sub_n(4), k).dim()) == oracle::binom(6, k));
    CHECK(static_cast<long>(sym(quotient_u(4), 3).dim()) == oracle::binom(8, 3));
    CHECK(direct_sum(n, u).dim() == 6);
    CHECK_NOTHROW(wedge(adjoint_g(3), 2).check_serre());
    CHECK_NOTHROW(tensor(wedge(n, 2), u).check_serre());
  }

  TEST_CASE("quotients") {
    auto g = adjoint_g(3);
    std::vector<exactla::SparseVector> b;
    for (std::size_t k = 0; k < g.dim(); ++k)
      if (g.label(k)[0] != 'e') b.push_back(exactla::SparseVector::unit(static_cast<exactla::Index>(k)));
    auto Q = quotient(g, b);
    CHECK(Q.character() == quotient_u(3).character());
    CHECK(quotient(g, {}).character() == g.character());
    // a non-homogeneous generator is rejected
    auto bad = exactla::SparseVector::from_entries({{static_cast<exactla::Index>(index_of(g, "e1")), 1},
                                                    {static_cast<exactla::Index>(index_of(g, "f1")), 1}});
    CHECK_THROWS_AS(quotient(g, {bad}), NotSubmodule);
    // the span of e1 alone is not f-stable
    CHECK_THROWS_AS(quotient(g, {exactla::SparseVector::unit(static_cast<exactla::Index>(index_of(g, "e1")))}),
                    NotSubmodule);
  }

  TEST_CASE("irreducible modules") {
    roots::RootSystemA s3(3), s4(4);
    CHECK(irreducible_module(s3.zero()).dim() == 1);
    auto ad = irreducible_module(s3.rho());
    CHECK(ad.dim() == 8);
    CHECK(ad.character() == adjoint_g(3).character());
    auto w2 = irreducible_module(s4.fundamental(2));
    CHECK(w2.dim() == 6);
    CHECK(w2.character() == wedge(natural(4), 2).character());
    for (const auto& lam : {Weight({2, 1}), Weight({0, 3}), Weight({1, 0, 2}), Weight({1, 1, 1})}) {
      auto L = irreducible_module(lam);
      CHECK(static_cast<long>(L.dim()) == oracle::weyl_dim(lam.c));
      CHECK_NOTHROW(L.check_serre());
      CHECK_NOTHROW(L.check_commutation());
      // finite-dimensional simple modules are self-dual up to -w0
      std::vector<int> rev(lam.c.rbegin(), lam.c.rend());
      CHECK(negated(L.character()) == irreducible_module(Weight(rev)).character());
    }
    CHECK_THROWS_AS(irreducible_module(Weight({1, -1})), NotDominant);
    CHECK_THROWS_AS(irreducible_module(Weight({9, 9, 9}), 100), BudgetExceeded);
  }

  TEST_CASE("lowering polynomials act on weight spaces") {
    roots::RootSystemA s3(3);
    auto n = sub_n(3);
    auto mu = -s3.simple_root(2);
    auto I = apply_lowering_polynomial(n, LoweringPolynomial::one(), mu);
    CHECK(I == exactla::SparseMatrix::identity(1));
    auto F = apply_lowering_polynomial(n, LoweringPolynomial::parse("f1"), mu);
    REQUIRE(F.rows() == 1);
    REQUIRE(F.cols() == 1);
    CHECK(F.at(0, 0) == Rational(1));

    auto g = adjoint_g(3);
    auto P = apply_lowering_polynomial(g, LoweringPolynomial::parse("f1^2"), s3.simple_root(1));
    // e1 -> -2 f1, computed from [f1,[f1,e1]] with matrix units
    const auto& alg = sl(3);
    std::vector<int> E = alg.matrix(alg.e_index(0)), F1 = alg.matrix(alg.f_index(0));
    auto comm = [](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> c(9, 0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) c[i * 3 + j] += a[i * 3 + k] * b[k * 3 + j] - b[i * 3 + k] * a[k * 3 + j];
      return c;
    };
    auto target = comm(F1, comm(F1, E));
    int scale = 0;
    for (int q = 0; q < 9; ++q)
      if (F1[q]) scale = target[q] / F1[q];
    CHECK(scale == -2);
    REQUIRE(P.rows() == 1);
    CHECK(P.at(0, 0) == Rational(scale));
    // alpha2 - 2 alpha1 is not a weight of g: the map is zero, not an error
    CHECK(apply_lowering_polynomial(g, LoweringPolynomial::parse("f1^2"), s3.simple_root(2)).is_zero());
  }

  TEST_CASE("windowed modules refuse to act outside the window") {
    auto g = adjoint_g(3);
    ModuleBuilder b(3, "w");
    roots::RootSystemA s3(3);
    b.add("x", s3.simple_root(1));
    b.set_window({s3.simple_root(1)});
    auto W = b.build();
    CHECK_THROWS_AS(W.act_lower(1, exactla::SparseVector::unit(0)), MissingWeightSpace);
  }
}
