#include <doctest.h>

#include "hh/bgg.hpp"
#include "hh/errors.hpp"
#include "hh/springer.hpp"

using namespace hh;
using namespace hh::bgg;
using roots::Weight;

namespace {

std::vector<std::size_t> V(std::initializer_list<std::size_t> v) { return v; }

const Arrow& arrow(const BGGData& d, const std::string& from, const std::string& to) {
  for (const auto& a : d.arrows)
    if (a.source.word_string() == from && a.target.word_string() == to) return a;
  FAIL("no arrow " << from << " -> " << to);
  return d.arrows.front();
}

}  // namespace

TEST_SUITE("bgg") {
  TEST_CASE("tables cover the Bruhat graph with consistent weights") {
    for (int m : {2, 3, 4}) {
      auto d = bgg_data(m);
      CHECK(d.complete);
      CHECK(d.arrows.size() == roots::bruhat_graph(roots::RootSystemA(m)).size());
      CHECK_NOTHROW(check_bgg_data(d));
      roots::RootSystemA sys(m);
      // poly.weight is the total lowering: source weight minus target weight
      for (const auto& a : d.arrows)
        CHECK(a.poly.weight(sys) ==
              roots::dot_action(a.source, sys.zero()) - roots::dot_action(a.target, sys.zero()));
    }
    CHECK_THROWS_AS(bgg_data(5), UnsupportedRank);
  }

  TEST_CASE("sl3 arrows") {
    auto d = bgg_data(3);
    CHECK(arrow(d, "e", "1").poly.str() == "f1");
    CHECK(arrow(d, "1", "21").poly.str() == "f2^2");
    // the dualized picture carries -2f2f1 + f1f2 on s1 -> s1s2
    auto r = bgg_data(3, Weight::zero(3), Dualization::Reversed);
    CHECK(arrow(r, "1", "12").poly == bmod::LoweringPolynomial::parse("-2f2f1 + f1f2"));
    CHECK(arrow(d, "1", "12").poly == bmod::LoweringPolynomial::parse("-2f2f1 + f1f2").reversed());
  }

  TEST_CASE("only the same-word dualization yields complexes") {
    auto r = bgg_data(3, Weight::zero(3), Dualization::Reversed);
    auto E = springer::build_vk_component(3, 3, 2, required_window(r)).module;
    CHECK_THROWS_AS(bgg_cochain(E, r), NotAComplex);
    CHECK_NOTHROW(bgg_cochain(E, bgg_data(3)));
  }

  TEST_CASE("sl3 complexes from the text") {
    auto d = bgg_data(3);
    auto n = bmod::sub_n(3), u = bmod::quotient_u(3);
    auto c = bgg_cochain(bmod::trivial(3), d);
    CHECK(exactla::cohomology_dims(c) == V({1, 0, 0, 0}));
    auto nu = bgg_cochain(bmod::tensor(n, u), d);
    CHECK(nu.dims == V({3, 2, 0, 0}));
    CHECK(exactla::rank(nu.maps[0]) == 2);
    CHECK(exactla::kernel_dim(nu.maps[0]) == 1);
    auto w2 = bgg_cochain(bmod::tensor(bmod::wedge(n, 2), u), d);
    CHECK(w2.dims == V({1, 4, 0, 0}));
    CHECK(exactla::cohomology_dims(w2) == V({0, 3, 0, 0}));
    auto V32 = bgg_cochain(springer::build_vk_component(3, 3, 2, required_window(d)).module, d);
    CHECK(exactla::kernel_dim(V32.maps[1]) == 4);
    CHECK(exactla::cohomology_dims(V32)[1] == 3);
  }

  TEST_CASE("multiplicities") {
    roots::RootSystemA s3(3);
    auto n = bmod::sub_n(3), u = bmod::quotient_u(3);
    CHECK(multiplicity(bmod::tensor(n, u), s3.rho()).dims == V({0, 2, 0, 0}));
    CHECK(multiplicity(bmod::tensor(n, u), s3.zero()).dims == V({1, 0, 0, 0}));
    CHECK(multiplicity(bmod::tensor(bmod::wedge(n, 2), u), s3.zero()).dims == V({0, 3, 0, 0}));
    CHECK(multiplicity(u, s3.rho()).dims == V({1, 0, 0, 0}));
    CHECK(multiplicity(bmod::trivial(3), s3.rho()).dims == V({0, 0, 0, 0}));
    CHECK(multiplicity(bmod::wedge(n, 3), s3.zero()).dims == V({0, 0, 0, 1}));
  }

  TEST_CASE("Euler characteristic of the BGG complex") {
    for (int m : {2, 3, 4}) {
      auto d = bgg_data(m);
      roots::RootSystemA sys(m);
      auto E = springer::build_vk_component(m, 2, 1, required_window(d)).module;
      auto c = bgg_cochain(E, d);
      long chi = 0, direct = 0;
      for (std::size_t q = 0; q < c.dims.size(); ++q) chi += (q % 2 ? -1 : 1) * static_cast<long>(c.dims[q]);
      for (const auto& w : sys.weyl_group())
        direct += (w.length() % 2 ? -1 : 1) * static_cast<long>(E.space(roots::dot_action(w, sys.zero())).size());
      CHECK(chi == direct);
      auto h = exactla::cohomology_dims(c);
      long hchi = 0;
      for (std::size_t q = 0; q < h.size(); ++q) hchi += (q % 2 ? -1 : 1) * static_cast<long>(h[q]);
      CHECK(hchi == chi);
    }
  }

  TEST_CASE("hodge entries") {
    CHECK(hodge_entry(3, 1, 3) == 3);
    CHECK(hodge_entry(4, 2, 4) == 9);
    for (int m : {2, 3, 4}) CHECK(hodge_entry(m, 0, 0) == 1);
    CHECK_THROWS_AS(hodge_entry(3, 1, 2), OddParity);
    CHECK_THROWS_AS(hodge_entry(3, 4, 4), InvalidArgument);
  }

  TEST_CASE("diamonds") {
    auto d2 = hodge_diamond(2);
    CHECK(d2.rows() == std::vector<std::vector<long>>{{1}, {1, 1}});
    CHECK(d2.total() == 3);
    auto d3 = hodge_diamond(3);
    CHECK(d3.rows() == std::vector<std::vector<long>>{{1}, {2, 1}, {2, 3, 1}, {1, 2, 2, 1}});
    CHECK(d3.total() == 16);
    DiamondOptions plain;
    plain.mirror = false;
    CHECK(hodge_diamond(3, plain) == d3);
    std::vector<EntryLog> logs;
    DiamondOptions opt;
    opt.jobs = 2;
    opt.log = [&](const EntryLog& l) { logs.push_back(l); };
    CHECK(hodge_diamond(3, opt) == d3);
    CHECK(logs.size() == d3.entries.size());
    CHECK_THROWS_AS(hodge_diamond(5), UnsupportedRank);
  }

  TEST_CASE("partial and tensor routes for nonzero weights") {
    roots::RootSystemA s4(4);
    auto theta = s4.fundamental(1) + s4.fundamental(3);
    auto E = springer::build_vk_component(4, 1, 0).module;
    auto p = multiplicity(E, theta);
    CHECK(p.dims[1] == 3);
    CHECK(p.route != "bgg");
  }
}
