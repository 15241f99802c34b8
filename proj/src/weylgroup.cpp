#include "schur/weylgroup.hpp"

#include <deque>
#include <stdexcept>

namespace schur {

Weight reflect(const RootDatum& d, std::size_t i, const Weight& lambda) {
  const std::int64_t k = d.coroot_pairing(i, lambda);
  if (k == 0) return lambda;
  return lambda - k * d.alpha(i);
}

IntVector reflect_coweight(const RootDatum& d, std::size_t i, const IntVector& h) {
  const std::int64_t k = d.pairing(h, d.alpha(i));
  IntVector out = h;
  for (std::size_t a = 0; a < out.size(); ++a) out[a] -= k * d.coroot(i)[a];
  return out;
}

WeightSet orbit(const RootDatum& d, const Weight& lambda) {
  WeightSet seen{lambda};
  std::deque<Weight> todo{lambda};
  while (!todo.empty()) {
    Weight w = std::move(todo.front());
    todo.pop_front();
    for (std::size_t i = 0; i < d.num_simple(); ++i) {
      Weight s = reflect(d, i, w);
      if (seen.insert(s).second) todo.push_back(std::move(s));
    }
  }
  return seen;
}

bool is_dominant(const RootDatum& d, const Weight& lambda) {
  for (std::size_t i = 0; i < d.num_simple(); ++i)
    if (d.coroot_pairing(i, lambda) < 0) return false;
  return true;
}

Weight dominant_representative(const RootDatum& d, const Weight& lambda) {
  Weight w = lambda;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < d.num_simple(); ++i)
      if (d.coroot_pairing(i, w) < 0) {
        w = reflect(d, i, w);
        moved = true;
      }
    if (!moved) return w;
  }
}

std::optional<IntVector> root_coordinates(const RootDatum& d, const Weight& x) {
  const std::size_t m = d.num_simple();
  const QMatrix& ainv = d.cartan_matrix_inverse();
  const IntVector dyn = d.dynkin_labels(x);
  IntVector k(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m; ++j) s += ainv(i, j) * static_cast<long>(dyn[j]);
    if (s.get_den() != 1) return std::nullopt;
    k[i] = s.get_num().get_si();
  }
  Weight back = Weight::zero(d.rank());
  for (std::size_t i = 0; i < m; ++i) back += k[i] * d.alpha(i);
  if (back != x) return std::nullopt;
  return k;
}

bool leq_dominance(const RootDatum& d, const Weight& lo, const Weight& hi) {
  auto k = root_coordinates(d, hi - lo);
  if (!k) return false;
  for (auto c : *k)
    if (c < 0) return false;
  return true;
}

WeightSet saturated_closure(const RootDatum& d, const WeightSet& seeds) {
  WeightSet out;
  for (const Weight& top : seeds) {
    if (!is_dominant(d, top)) throw std::invalid_argument("saturated_closure: seed " + to_string(top) + " is not dominant");
    // walk the weights of L(top) downward from the top
    WeightSet seen{top};
    std::deque<Weight> todo{top};
    while (!todo.empty()) {
      Weight w = std::move(todo.front());
      todo.pop_front();
      if (is_dominant(d, w)) out.insert(w);
      for (std::size_t i = 0; i < d.num_simple(); ++i) {
        Weight next = w - d.alpha(i);
        if (seen.count(next)) continue;
        if (!leq_dominance(d, dominant_representative(d, next), top)) continue;
        seen.insert(next);
        todo.push_back(std::move(next));
      }
    }
  }
  return out;
}

bool is_saturated_set(const RootDatum& d, const WeightSet& pi) {
  for (const Weight& w : pi)
    if (!is_dominant(d, w)) return false;
  return saturated_closure(d, pi) == pi;
}

WeightSet w_orbit_union(const RootDatum& d, const WeightSet& pi) {
  WeightSet out;
  for (const Weight& w : pi) {
    if (out.count(w)) continue;
    WeightSet o = orbit(d, w);
    out.insert(o.begin(), o.end());
  }
  return out;
}

std::size_t weyl_group_order(const RootDatum& d) {
  WeightSet roots;
  for (const Weight& a : d.simple_roots()) {
    WeightSet o = orbit(d, a);
    roots.insert(o.begin(), o.end());
  }
  Weight two_rho = Weight::zero(d.rank());
  for (const Weight& r : roots)
    if (leq_dominance(d, Weight::zero(d.rank()), r)) two_rho += r;
  return orbit(d, two_rho).size();
}

std::size_t weyl_group_order_of_type(char type, int n) {
  auto fact = [](int k) {
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
    return f;
  };
  switch (type) {
    case 'A':
      return fact(n + 1);
    case 'B':
    case 'C':
      return (std::size_t{1} << n) * fact(n);
    case 'D':
      if (n < 2) break;
      return (std::size_t{1} << (n - 1)) * fact(n);
    case 'E':
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      if (n == 8) return 696729600;
      break;
    case 'F':
      if (n == 4) return 1152;
      break;
    case 'G':
      if (n == 2) return 12;
      break;
    default:
      break;
  }
  throw std::invalid_argument(std::string("no Weyl group order for type ") + type + std::to_string(n));
}

}  // namespace schur
