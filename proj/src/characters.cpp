#include "schur/characters.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace schur {

std::vector<PositiveRoot> positive_roots(const RootDatum& d) {
  const std::size_t m = d.num_simple();
  std::map<Weight, PositiveRoot> all;
  std::deque<Weight> todo;
  for (std::size_t i = 0; i < m; ++i) {
    PositiveRoot p{d.alpha(i), IntVector(m, 0), d.coroot(i), IntVector(m, 0)};
    p.root_coords[i] = 1;
    p.coroot_coords[i] = 1;
    if (all.emplace(p.root, p).second) todo.push_back(p.root);
  }
  while (!todo.empty()) {
    const PositiveRoot cur = all.at(todo.front());
    todo.pop_front();
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t a = d.coroot_pairing(j, cur.root);
      const std::int64_t b = d.pairing(cur.coroot, d.alpha(j));
      PositiveRoot next = cur;
      next.root = cur.root - a * d.alpha(j);
      next.root_coords[j] -= a;
      for (std::size_t k = 0; k < next.coroot.size(); ++k) next.coroot[k] -= b * d.coroot(j)[k];
      next.coroot_coords[j] -= b;
      if (all.emplace(next.root, next).second) todo.push_back(next.root);
    }
  }
  std::vector<PositiveRoot> out;
  for (auto& [r, p] : all)
    if (std::all_of(p.root_coords.begin(), p.root_coords.end(), [](std::int64_t c) { return c >= 0; }))
      out.push_back(std::move(p));
  return out;
}

namespace {

void require_dominant(const RootDatum& d, const Weight& lambda, const char* what) {
  if (!is_dominant(d, lambda)) throw std::invalid_argument(std::string(what) + ": " + to_string(lambda) + " is not dominant");
}

Integer weyl_dim_with(const RootDatum& d, const std::vector<PositiveRoot>& pos, const Weight& lambda) {
  const IntVector dyn = d.dynkin_labels(lambda);
  Rational prod = 1;
  for (const auto& p : pos) {
    std::int64_t num = 0, den = 0;
    for (std::size_t i = 0; i < dyn.size(); ++i) {
      num += p.coroot_coords[i] * (dyn[i] + 1);
      den += p.coroot_coords[i];
    }
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    prod *= q;
  }
  if (prod.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return prod.get_num();
}

}  // namespace

Integer weyl_dim(const RootDatum& d, const Weight& lambda) {
  require_dominant(d, lambda, "weyl_dim");
  return weyl_dim_with(d, positive_roots(d), lambda);
}

CharacterTable freudenthal(const RootDatum& d, const Weight& lambda) {
  require_dominant(d, lambda, "freudenthal");
  const std::size_t m = d.num_simple();
  const auto pos = positive_roots(d);
  const WeightSet dom = saturated_closure(d, WeightSet{lambda});
  const IntVector lam_dyn = d.dynkin_labels(lambda);

  struct Item {
    std::int64_t height;
    Weight mu;
    IntVector k;
  };
  std::vector<Item> items;
  for (const Weight& mu : dom) {
    IntVector k = *root_coordinates(d, lambda - mu);
    std::int64_t h = 0;
    for (auto c : k) h += c;
    items.push_back({h, mu, std::move(k)});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.height != b.height ? a.height < b.height : a.mu < b.mu;
  });

  std::map<Weight, Integer> mult;  // dominant weights only
  auto lookup = [&](const Weight& x) -> Integer {
    auto it = mult.find(dominant_representative(d, x));
    return it == mult.end() ? Integer(0) : it->second;
  };
  for (const Item& it : items) {
    if (it.height == 0) {
      mult[it.mu] = 1;
      continue;
    }
    const IntVector mu_dyn = d.dynkin_labels(it.mu);
    Integer den = 0;
    for (std::size_t j = 0; j < m; ++j) den += it.k[j] * d.d(j) * (lam_dyn[j] + mu_dyn[j] + 2);
    Integer num = 0;
    for (const auto& p : pos) {
      Weight x = it.mu + p.root;
      while (dom.count(dominant_representative(d, x))) {
        const IntVector xd = d.dynkin_labels(x);
        std::int64_t ip = 0;
        for (std::size_t j = 0; j < m; ++j) ip += p.root_coords[j] * d.d(j) * xd[j];
        num += lookup(x) * ip;
        x += p.root;
      }
    }
    num *= 2;
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    Integer q = num / den;
    if (q > 0) mult[it.mu] = q;
  }

  CharacterTable table;
  for (const auto& [mu, c] : mult)
    for (const Weight& w : orbit(d, mu)) table[w] = c;
  return table;
}

WeightSet weight_support(const RootDatum& d, const Weight& lambda) {
  WeightSet s;
  for (const auto& [w, c] : freudenthal(d, lambda)) s.insert(w);
  return s;
}

DominantMultiset tensor_decompose(const RootDatum& d, const DominantMultiset& a, const Weight& mu) {
  require_dominant(d, mu, "tensor_decompose");
  const CharacterTable ch = freudenthal(d, mu);
  std::map<Weight, Integer> acc;
  for (const auto& [lambda, c] : a) {
    for (const auto& [nu, mnu] : ch) {
      // straighten lambda + nu under the dot action
      Weight x = lambda + nu;
      int sign = 1;
      bool wall = false;
      for (bool moved = true; moved && !wall;) {
        moved = false;
        for (std::size_t i = 0; i < d.num_simple(); ++i) {
          const std::int64_t p = d.coroot_pairing(i, x);
          if (p == -1) {
            wall = true;
            break;
          }
          if (p < -1) {
            x -= (p + 1) * d.alpha(i);
            sign = -sign;
            moved = true;
          }
        }
      }
      if (wall) continue;
      acc[x] += sign * c * mnu;
    }
  }
  DominantMultiset out;
  for (auto& [w, c] : acc) {
    if (c < 0) throw std::logic_error("Brauer-Klimyk produced a negative multiplicity at " + to_string(w));
    if (c > 0) out.emplace(w, c);
  }
  return out;
}

DominantMultiset tensor_power_factors(const RootDatum& d, const Weight& v, int r) {
  if (r < 0) throw std::invalid_argument("tensor power exponent must be nonnegative");
  require_dominant(d, v, "tensor_power_factors");
  DominantMultiset m{{Weight::zero(d.rank()), Integer(1)}};
  for (int k = 0; k < r; ++k) m = tensor_decompose(d, m, v);
  return m;
}

Integer module_dimension(const RootDatum& d, const DominantMultiset& m) {
  const auto pos = positive_roots(d);
  Integer s = 0;
  for (const auto& [w, c] : m) s += c * weyl_dim_with(d, pos, w);
  return s;
}

WeightSet highest_weights(const DominantMultiset& m) {
  WeightSet s;
  for (const auto& [w, c] : m) s.insert(w);
  return s;
}

WeightSet dominant_weights(const RootDatum& d, const DominantMultiset& m) {
  return saturated_closure(d, highest_weights(m));
}

WeightSet tensor_power_dominant_weights(const RootDatum& d, const Weight& v, int r) {
  if (r < 0) throw std::invalid_argument("tensor power exponent must be nonnegative");
  const WeightSet support = weight_support(d, v);
  WeightSet cur{Weight::zero(d.rank())};
  for (int k = 0; k < r; ++k) {
    WeightSet next;
    for (const Weight& a : cur)
      for (const Weight& b : support) next.insert(a + b);
    cur = std::move(next);
  }
  WeightSet out;
  for (const Weight& w : cur)
    if (is_dominant(d, w)) out.insert(w);
  return out;
}

Weight module_highest_weight(const RootDatum& d, const std::string& module) {
  const std::size_t n = d.rank();
  if (module == "natural") {
    if (d.has_epsilon()) {
      std::vector<Rational> e(n, Rational(0));
      e[0] = 1;
      return d.from_epsilon(e);
    }
    if (d.num_simple() != n) throw std::invalid_argument("natural module needs an epsilon view or |I| = rank");
    Weight w = Weight::zero(n);
    w[0] = 1;
    return w;
  }
  if (module == "spin") {
    if (d.kind() != "B") throw std::invalid_argument("the spin module is only defined here for type B");
    Weight w = Weight::zero(n);
    w[n - 1] = 1;
    return w;
  }
  if (module == "adjoint") {
    // the highest root: the dominant positive root of largest height
    std::optional<PositiveRoot> best;
    std::int64_t best_h = -1;
    for (const auto& p : positive_roots(d)) {
      std::int64_t h = 0;
      for (auto c : p.root_coords) h += c;
      if (is_dominant(d, p.root) && h > best_h) {
        best = p;
        best_h = h;
      }
    }
    return best->root;
  }
  throw std::invalid_argument("unknown module '" + module + "' (natural, spin, adjoint)");
}

WeightSet tensor_power_pi(const RootDatum& d, const Weight& v, int r) {
  return saturated_closure(d, tensor_power_dominant_weights(d, v, r));
}

SaturationCheck check_saturated_module(const RootDatum& d, const Weight& v, int r) {
  SaturationCheck c;
  c.r = r;
  c.factor_highest_weights = highest_weights(tensor_power_factors(d, v, r));
  c.dominant_weights = tensor_power_dominant_weights(d, v, r);
  for (const Weight& w : c.dominant_weights)
    if (!c.factor_highest_weights.count(w)) c.missing.insert(w);
  for (const Weight& w : c.factor_highest_weights)
    if (!c.dominant_weights.count(w)) throw std::logic_error("factor highest weight " + to_string(w) + " is not a weight");
  c.saturated = c.missing.empty();
  return c;
}

bool is_saturated_module(const RootDatum& d, const Weight& v, int r) { return check_saturated_module(d, v, r).saturated; }

bool is_minuscule(const RootDatum& d, const Weight& lambda) {
  return Integer(static_cast<unsigned long>(orbit(d, lambda).size())) == weyl_dim(d, lambda);
}

Integer dim_schur(const RootDatum& d, const WeightSet& pi) {
  const auto pos = positive_roots(d);
  Integer s = 0;
  for (const Weight& w : pi) {
    require_dominant(d, w, "dim_schur");
    Integer k = weyl_dim_with(d, pos, w);
    s += k * k;
  }
  return s;
}

ConjectureReport conjecture_scan(const RootDatum& d, const Weight& v, int r_max) {
  ConjectureReport rep;
  rep.v = v;
  rep.dimension = weyl_dim(d, v);
  rep.orbit_size = orbit(d, v).size();
  rep.minuscule = Integer(static_cast<unsigned long>(rep.orbit_size)) == rep.dimension;
  for (int r = 0; r <= r_max; ++r) {
    rep.per_r.push_back(check_saturated_module(d, v, r));
    if (!rep.per_r.back().saturated && !rep.witness) rep.witness = r;
  }
  return rep;
}

}  // namespace schur
