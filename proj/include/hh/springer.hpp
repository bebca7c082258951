#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hh/bmodule.hpp"

namespace hh::springer {

using bmod::BModule;
using exactla::SparseVector;
using roots::Weight;

// Basis element of Lambda^k over S(u) of (S(u) (x) g  +  S(u) (x) n):
// a u-monomial, a subset of the g-slot basis (sl indices) and a subset of the n-slot roots.
// Wedge order: g-slot generators (increasing) before n-slot generators (increasing).
struct Key {
  std::vector<std::uint8_t> mono;
  std::uint32_t g = 0;
  std::uint32_t n = 0;
  auto operator<=>(const Key&) const = default;
};

using Term = std::map<Key, Rational>;

class Context {
 public:
  explicit Context(int m);
  int m() const { return m_; }
  int num_roots() const { return N_; }
  int half_dim() const { return N_; }

  Weight weight(const Key& k) const;
  int exterior_degree(const Key& k) const;
  // r with internal degree -2r
  int r_of(const Key& k) const;
  bool is_free(const Key& k) const;
  std::string label(const Key& k) const;

  // f_i on an ambient basis element by the Leibniz rule (no reduction)
  Term lower_ambient(int i, const Key& k) const;
  // normal form modulo Delta(b) wedge (...): g-slot b-elements replaced by -ad
  Term project(const Term& t) const;
  Term lower_free(int i, const Key& k) const { return project(lower_ambient(i, k)); }
  // Delta(x) wedge T for a b-element x (sl index)
  Term delta_wedge(int x, const Key& t) const;
  // ad(x) = sum c e_beta (x) f_gamma as (beta, gamma, c)
  const std::vector<std::tuple<int, int, Rational>>& ad(int x) const { return ad_[x]; }

  std::vector<Key> free_basis(int k, int r) const;
  std::vector<Key> ambient_basis(int k, int r, const Weight& mu) const;
  // monomials of degree p and the given weight
  const std::vector<std::vector<std::uint8_t>>& monomials(int p, const Weight& w) const;

 private:
  void add_g(Term& out, const Key& k, int old_x, int new_x, const Rational& c) const;
  int m_, N_, D_;
  std::vector<Weight> wt_g_, wt_n_, wt_u_;
  std::vector<std::vector<std::tuple<int, int, Rational>>> ad_;
  mutable std::map<std::pair<int, Weight>, std::vector<std::vector<std::uint8_t>>> mono_cache_;
  mutable std::map<int, bool> mono_done_;
};

const Context& context(int m);

struct VkComponent {
  int k = 0, r = 0;
  BModule module;
  std::optional<std::set<Weight>> window;
  std::vector<Key> keys;  // key of each module basis element
};

std::vector<Key> ambient_component(int m, int k, int r, const Weight& mu);
// spanning vectors in coordinates of ambient_component(m,k,r,mu)
std::vector<SparseVector> delta_subspace(int m, int k, int r, const Weight& mu);

VkComponent build_vk_component(int m, int k, int r, std::optional<std::set<Weight>> window = std::nullopt);

// Same component computed as ambient module modulo the Delta-span by elimination,
// materialized on a window (required when given; otherwise all ambient weights).
BModule build_vk_by_elimination(int m, int k, int r, std::optional<std::set<Weight>> window = std::nullopt);

// Zero-weight b-invariant of V_2^{-2}, in coordinates of build_vk_component(m,2,1).
SparseVector trivial_summand_witness(int m);

std::pair<int, int> duality_partner(int m, int k, int r);

}  // namespace hh::springer
