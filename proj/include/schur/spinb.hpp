#pragma once

#include "schur/characters.hpp"
#include "schur/rootdata.hpp"
#include "schur/weylgroup.hpp"

#include <vector>

namespace schur {

/// Coefficients of omega in varpi_1, ..., varpi_{n-1}, 2 varpi_n. A weight with odd last
/// label is read as varpi_n + omega and `shifted` is set.
struct OmegaCoords {
  IntVector t;
  bool shifted = false;

  std::int64_t norm() const;
  bool so_dominant() const;
};

/// Requires a type B datum whose X-basis is the fundamental weights.
OmegaCoords omega_coords(const RootDatum& d, const Weight& w);
/// |omega|, with |varpi_n + omega| = |omega|.
std::int64_t omega_norm(const RootDatum& d, const Weight& w);
/// |omega - alpha_i| <= |omega|
bool check_lemma_C1(const RootDatum& d, const Weight& omega, std::size_t i);

/// Dominant SO-weights with |omega| = m.
WeightSet sets_W_m(const RootDatum& d, int m);
/// W_0 + ... + W_m
WeightSet union_W(const RootDatum& d, int m);
/// { varpi_n + omega }
WeightSet spin_shift(const RootDatum& d, const WeightSet& s);
/// union_W(r/2) for even r, spin_shift(union_W((r-1)/2)) for odd r.
WeightSet expected_spin_highest_weights(const RootDatum& d, int r);

/// Distinct highest weights of the composition factors of S^{(x) r}.
WeightSet spin_tensor_highest_weights(const RootDatum& d, int r);

struct SpinSquareReport {
  DominantMultiset factors;
  /// 0, varpi_1, ..., varpi_{n-1}, 2 varpi_n, each once.
  DominantMultiset expected;
  /// dim of each factor next to binom(2n+1, k).
  std::vector<std::pair<Integer, Integer>> dims;
  Integer total;
  Integer expected_total;
  bool ok() const;
};

SpinSquareReport check_spin_square(const RootDatum& d);

struct SpinSaturationEntry {
  int r = 0;
  WeightSet highest_weights;
  WeightSet expected;
  WeightSet dominant_weights;
  bool expected_is_saturated = false;
  bool matches() const { return highest_weights == expected; }
  bool saturated() const { return highest_weights == dominant_weights; }
  bool ok() const { return matches() && saturated() && expected_is_saturated; }
};

struct SpinSaturationReport {
  int n = 0;
  std::vector<SpinSaturationEntry> per_r;
  bool ok() const;
};

SpinSaturationReport check_spin_saturation(const RootDatum& d, int r_max);

}  // namespace schur
