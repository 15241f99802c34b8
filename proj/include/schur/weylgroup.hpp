#pragma once

#include "schur/rootdata.hpp"

#include <optional>
#include <set>

namespace schur {

/// Finite set of weights, iterated in lexicographic order.
using WeightSet = std::set<Weight>;

/// s_i(lambda) = lambda - <h_i, lambda> alpha_i
Weight reflect(const RootDatum& d, std::size_t i, const Weight& lambda);
/// Dual action on Y: s_i(h) = h - <h, alpha_i> h_i
IntVector reflect_coweight(const RootDatum& d, std::size_t i, const IntVector& h);

WeightSet orbit(const RootDatum& d, const Weight& lambda);
bool is_dominant(const RootDatum& d, const Weight& lambda);
Weight dominant_representative(const RootDatum& d, const Weight& lambda);

/// Coefficients k with x = sum k_i alpha_i, or nullopt when x is not in the root lattice.
std::optional<IntVector> root_coordinates(const RootDatum& d, const Weight& x);
/// lo <= hi in the dominance order, i.e. hi - lo in sum N alpha_i.
bool leq_dominance(const RootDatum& d, const Weight& lo, const Weight& hi);

/// All dominant mu with mu <= lambda for some seed lambda.
WeightSet saturated_closure(const RootDatum& d, const WeightSet& seeds);
/// Every element dominant and the set is closed downward.
bool is_saturated_set(const RootDatum& d, const WeightSet& pi);
/// W pi
WeightSet w_orbit_union(const RootDatum& d, const WeightSet& pi);

/// |W|, computed as the orbit size of a regular weight.
std::size_t weyl_group_order(const RootDatum& d);
/// |W| from the classification table, for cross-checking.
std::size_t weyl_group_order_of_type(char type, int rank);

}  // namespace schur
