#pragma once

#include "schur/weylgroup.hpp"

#include <map>
#include <vector>

namespace schur {

/// Dominant weight -> positive multiplicity.
using DominantMultiset = std::map<Weight, Integer>;
/// Full weight multiplicity function of one L(lambda).
using CharacterTable = std::map<Weight, Integer>;

struct PositiveRoot {
  Weight root;
  /// root = sum root_coords[i] alpha_i
  IntVector root_coords;
  /// coroot h_beta in the Y-basis
  IntVector coroot;
  /// h_beta = sum coroot_coords[i] h_i
  IntVector coroot_coords;
};

/// Sorted by root (lexicographic X-coordinates).
std::vector<PositiveRoot> positive_roots(const RootDatum& d);

Integer weyl_dim(const RootDatum& d, const Weight& lambda);
CharacterTable freudenthal(const RootDatum& d, const Weight& lambda);
/// Weights of L(lambda) with nonzero multiplicity.
WeightSet weight_support(const RootDatum& d, const Weight& lambda);

/// Composition factors of (sum_lambda m_lambda L(lambda)) (x) L(mu), Brauer-Klimyk.
DominantMultiset tensor_decompose(const RootDatum& d, const DominantMultiset& a, const Weight& mu);
/// Composition factors of L(v)^{(x) r}.
DominantMultiset tensor_power_factors(const RootDatum& d, const Weight& v, int r);
/// sum m_lambda dim L(lambda)
Integer module_dimension(const RootDatum& d, const DominantMultiset& m);
/// Highest weights of the factors.
WeightSet highest_weights(const DominantMultiset& m);
/// Pi+(M): dominant weights of the module with the given factors.
WeightSet dominant_weights(const RootDatum& d, const DominantMultiset& m);
/// Pi+(L(v)^{(x) r}) computed from r-fold sums of the weight support of L(v), without decomposing.
WeightSet tensor_power_dominant_weights(const RootDatum& d, const Weight& v, int r);

/// Highest weight of a named module: "natural" (eps_1, or the first fundamental weight
/// without an epsilon view), "spin" (last fundamental weight, type B), "adjoint" (highest root).
Weight module_highest_weight(const RootDatum& d, const std::string& module);
/// saturated_closure(Pi+(L(v)^{(x) r}))
WeightSet tensor_power_pi(const RootDatum& d, const Weight& v, int r);

struct SaturationCheck {
  int r = 0;
  WeightSet factor_highest_weights;
  WeightSet dominant_weights;
  /// Pi+ minus the factor highest weights
  WeightSet missing;
  bool saturated = false;
};

SaturationCheck check_saturated_module(const RootDatum& d, const Weight& v, int r);
bool is_saturated_module(const RootDatum& d, const Weight& v, int r);
bool is_minuscule(const RootDatum& d, const Weight& lambda);
/// sum over pi of (dim L(lambda))^2
Integer dim_schur(const RootDatum& d, const WeightSet& pi);

struct ConjectureReport {
  Weight v;
  bool minuscule = false;
  Integer dimension;
  std::size_t orbit_size = 0;
  std::vector<SaturationCheck> per_r;
  /// Smallest r with V^{(x) r} not saturated, if any r <= r_max.
  std::optional<int> witness;
  /// Saturated for every scanned r and minuscule, or neither; evidence only.
  bool consistent() const { return minuscule == !witness.has_value(); }
};

ConjectureReport conjecture_scan(const RootDatum& d, const Weight& v, int r_max);

}  // namespace schur
