#include "schur/spinb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schur {

namespace {

void require_b(const RootDatum& d) {
  if (d.kind() != "B") throw std::invalid_argument("spin checks need a type B datum, got " + d.name());
  const std::size_t n = d.num_simple();
  if (d.rank() != n) throw std::invalid_argument("spin checks need X spanned by the fundamental weights");
  for (std::size_t k = 0; k < n; ++k) {
    Weight e = Weight::zero(n);
    e[k] = 1;
    IntVector want(n, 0);
    want[k] = 1;
    if (d.dynkin_labels(e) != want) throw std::invalid_argument("spin checks need the fundamental-weight X-basis");
  }
}

Weight varpi(std::size_t n, std::size_t k) {
  Weight w = Weight::zero(n);
  w[k] = 1;
  return w;
}

void compositions(std::size_t parts, int m, IntVector& cur, std::vector<IntVector>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(m);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= m; ++k) {
    cur.push_back(k);
    compositions(parts, m - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::int64_t OmegaCoords::norm() const { return std::accumulate(t.begin(), t.end(), std::int64_t{0}); }

bool OmegaCoords::so_dominant() const {
  return std::all_of(t.begin(), t.end(), [](std::int64_t x) { return x >= 0; });
}

OmegaCoords omega_coords(const RootDatum& d, const Weight& w) {
  require_b(d);
  const std::size_t n = d.num_simple();
  IntVector labels = d.dynkin_labels(w);
  OmegaCoords c;
  c.shifted = labels[n - 1] % 2 != 0;
  if (c.shifted) labels[n - 1] -= 1;
  labels[n - 1] /= 2;
  c.t = labels;
  return c;
}

std::int64_t omega_norm(const RootDatum& d, const Weight& w) { return omega_coords(d, w).norm(); }

bool check_lemma_C1(const RootDatum& d, const Weight& omega, std::size_t i) {
  return omega_norm(d, omega - d.alpha(i)) <= omega_norm(d, omega);
}

WeightSet sets_W_m(const RootDatum& d, int m) {
  require_b(d);
  if (m < 0) return {};
  const std::size_t n = d.num_simple();
  std::vector<IntVector> comps;
  IntVector cur;
  compositions(n, m, cur, comps);
  WeightSet out;
  for (IntVector& t : comps) {
    t[n - 1] *= 2;
    out.insert(Weight(t));
  }
  return out;
}

WeightSet union_W(const RootDatum& d, int m) {
  WeightSet out;
  for (int j = 0; j <= m; ++j) out.merge(sets_W_m(d, j));
  return out;
}

WeightSet spin_shift(const RootDatum& d, const WeightSet& s) {
  require_b(d);
  const Weight top = varpi(d.num_simple(), d.num_simple() - 1);
  WeightSet out;
  for (const Weight& w : s) out.insert(top + w);
  return out;
}

WeightSet expected_spin_highest_weights(const RootDatum& d, int r) {
  if (r < 0) throw std::invalid_argument("negative tensor power");
  return r % 2 == 0 ? union_W(d, r / 2) : spin_shift(d, union_W(d, (r - 1) / 2));
}

WeightSet spin_tensor_highest_weights(const RootDatum& d, int r) {
  require_b(d);
  return highest_weights(tensor_power_factors(d, varpi(d.num_simple(), d.num_simple() - 1), r));
}

bool SpinSquareReport::ok() const {
  if (factors != expected || total != expected_total) return false;
  for (const auto& [have, want] : dims)
    if (have != want) return false;
  return true;
}

SpinSquareReport check_spin_square(const RootDatum& d) {
  require_b(d);
  const std::size_t n = d.num_simple();
  SpinSquareReport rep;
  rep.factors = tensor_power_factors(d, varpi(n, n - 1), 2);
  rep.total = module_dimension(d, rep.factors);
  mpz_ui_pow_ui(rep.expected_total.get_mpz_t(), 4, n);
  // wedge^k V has highest weight varpi_k for k < n and 2 varpi_n for k = n
  for (std::size_t k = 0; k <= n; ++k) {
    Weight w = Weight::zero(n);
    if (k > 0 && k < n) w[k - 1] = 1;
    if (k == n) w[n - 1] = 2;
    rep.expected[w] = 1;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * n + 1, k);
    rep.dims.emplace_back(weyl_dim(d, w), b);
  }
  return rep;
}

bool SpinSaturationReport::ok() const {
  return std::all_of(per_r.begin(), per_r.end(), [](const SpinSaturationEntry& e) { return e.ok(); });
}

SpinSaturationReport check_spin_saturation(const RootDatum& d, int r_max) {
  require_b(d);
  const std::size_t n = d.num_simple();
  SpinSaturationReport rep;
  rep.n = static_cast<int>(n);
  for (int r = 0; r <= r_max; ++r) {
    const SaturationCheck c = check_saturated_module(d, varpi(n, n - 1), r);
    SpinSaturationEntry e;
    e.r = r;
    e.highest_weights = c.factor_highest_weights;
    e.dominant_weights = c.dominant_weights;
    e.expected = expected_spin_highest_weights(d, r);
    e.expected_is_saturated = is_saturated_set(d, e.expected);
    rep.per_r.push_back(std::move(e));
  }
  return rep;
}

}  // namespace schur
