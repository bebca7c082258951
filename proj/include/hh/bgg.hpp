#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hh/bmodule.hpp"
#include "hh/exactla.hpp"
#include "hh/rootdata.hpp"

namespace hh::bgg {

using bmod::BModule;
using bmod::LoweringPolynomial;
using roots::Weight;
using roots::WeylElement;

// How a free-module arrow x -> x*u is turned into an operator on weight spaces.
enum class Dualization {
  SameWord,  // left action of u itself (the convention that yields a complex)
  Reversed,  // left action of u with every word reversed
};

struct Arrow {
  WeylElement source, target;  // cochain direction: E[source.lam] -> E[target.lam]
  LoweringPolynomial poly;     // includes the sign e(w, w')
};

struct BGGData {
  int m = 0;
  Weight lam;
  std::vector<WeylElement> nodes;  // sorted by length
  std::vector<Arrow> arrows;
  bool complete = false;  // arrows cover every Bruhat edge
};

BGGData bgg_data(int m, const Weight& lam, Dualization conv = Dualization::SameWord);
inline BGGData bgg_data(int m) { return bgg_data(m, Weight::zero(m)); }

// Throws InvalidArgument if an arrow is not a Bruhat cover or has the wrong weight.
void check_bgg_data(const BGGData& d);

// Weights w.lam plus every intermediate weight on every monomial path.
std::set<Weight> required_window(const BGGData& d);

exactla::CochainComplex bgg_cochain(const BModule& E, const BGGData& d);

struct MultiplicityProfile {
  Weight lam;
  std::vector<std::size_t> dims;
  std::string route;  // "bgg", "bgg-partial" or "bgg-tensor"
};

// Multiplicity of L_lam in H^i(G/B, G x_B E) for every i.
MultiplicityProfile multiplicity(const BModule& E, const Weight& lam, int jobs = 1);

struct EntryLog {
  int i, j, k, r;
  std::size_t window_weights;
  std::vector<std::size_t> term_dims;
  double seconds;
  bool mirrored;
};

struct DiamondOptions {
  int jobs = 1;
  bool mirror = true;
  std::function<void(const EntryLog&)> log;
};

struct HodgeDiamond {
  int m = 0;
  std::map<std::pair<int, int>, long> entries;  // (i, j) -> h
  long total() const;
  int n() const { return m * (m - 1) / 2; }
  // row t lists h^{i,j} with i+j = 2t, ordered by j-i = 0, 2, ..., 2t
  std::vector<std::vector<long>> rows() const;
  long at(int i, int j) const;
  bool operator==(const HodgeDiamond& o) const { return m == o.m && entries == o.entries; }
};

// All (i, j) positions of the diamond for sl_m.
std::vector<std::pair<int, int>> diamond_positions(int m);

long hodge_entry(int m, int i, int j, EntryLog* log = nullptr);
HodgeDiamond hodge_diamond(int m, const DiamondOptions& opt = {});

}  // namespace hh::bgg
