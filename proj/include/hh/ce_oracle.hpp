#pragma once

#include <map>
#include <vector>

#include "hh/bmodule.hpp"
#include "hh/exactla.hpp"

namespace hh::ce {

using bmod::BModule;
using roots::Weight;

// Action of every root vector f_beta on F, as images of basis vectors.
std::vector<std::vector<exactla::SparseVector>> root_actions(const BModule& F);

// Weight-zero part of the Chevalley-Eilenberg complex of n with coefficients in F.
exactla::CochainComplex ce_complex(const BModule& F);

constexpr std::size_t kDefaultBudget = 400000;

// dim H^p(n, Hom(L_lam, E))^h for every p.
std::vector<std::size_t> ce_cohomology(const BModule& E, const Weight& lam, std::size_t budget = kDefaultBudget,
                                       int jobs = 1);

// Multiplicity profiles for every L_lam that can occur in H(G x_B E).
std::map<Weight, std::vector<std::size_t>> full_decomposition(const BModule& E, std::size_t budget = kDefaultBudget,
                                                              int jobs = 1);

}  // namespace hh::ce
