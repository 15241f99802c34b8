#include "properties.hpp"
#include "schur/characters.hpp"
#include "schur/cli.hpp"
#include "schur/idealgen.hpp"
#include "schur/matrixoracle.hpp"
#include "schur/spinb.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace schur;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

using Criterion = std::function<Outcome()>;

// ---- test-side oracles

std::vector<IntVector> partitions(int r, int parts) {
  std::vector<IntVector> out;
  IntVector cur;
  std::function<void(int, int)> go = [&](int left, int cap) {
    if (static_cast<int>(cur.size()) == parts) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 0; --k) {
      cur.push_back(k);
      go(left - k, k);
      cur.pop_back();
    }
  };
  go(r, r);
  return out;
}

Integer hook_content_dim(const IntVector& shape, int n) {
  Rational q = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (std::int64_t j = 0; j < shape[i]; ++j) {
      std::int64_t leg = 0;
      for (std::size_t k = i + 1; k < shape.size(); ++k)
        if (shape[k] > j) ++leg;
      Rational f(n + j - static_cast<std::int64_t>(i), shape[i] - j + leg);
      f.canonicalize();
      q *= f;
    }
  if (q.get_den() != 1) throw std::logic_error("hook-content quotient is not integral");
  return q.get_num();
}

// integer vectors with sum |x_i| = m
std::vector<IntVector> signed_compositions(int m, std::size_t parts) {
  std::vector<IntVector> out;
  IntVector cur;
  std::function<void(int)> go = [&](int left) {
    if (cur.size() == parts) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int x = -left; x <= left; ++x) {
      cur.push_back(x);
      go(left - std::abs(x));
      cur.pop_back();
    }
  };
  go(m);
  return out;
}

WeightSet from_eps(const RootDatum& d, const std::vector<IntVector>& vs) {
  WeightSet out;
  for (const IntVector& v : vs) {
    std::vector<Rational> e(v.begin(), v.end());
    out.insert(d.from_epsilon(e));
  }
  return out;
}

// Dynkin labels t with sum (t_1, ..., t_{n-1}, t_n / 2) = m
WeightSet so_weights_of_norm(std::size_t n, int m) {
  WeightSet out;
  for (const IntVector& p : signed_compositions(m, n)) {
    if (std::any_of(p.begin(), p.end(), [](std::int64_t x) { return x < 0; })) continue;
    Weight w(p);
    w[n - 1] *= 2;
    out.insert(w);
  }
  return out;
}

WeightSet wpi_of(const RootDatum& d, const std::string& module, int r) {
  return w_orbit_union(d, tensor_power_pi(d, module_highest_weight(d, module), r));
}

std::string text(const Weight& w) { return to_string(w); }

// ---- criteria

Outcome ac1() {
  Outcome o;
  std::ifstream in(SCHUR_FIXTURE_DIR "/type_a_gens.txt");
  if (!in) {
    o.fail("fixture file missing");
    return o;
  }
  std::vector<std::pair<std::string, std::string>> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("$ ", 0) == 0)
      cases.emplace_back(line.substr(2), "");
    else if (!line.empty() && !cases.empty())
      cases.back().second += line + "\n";
  }
  o.expect(cases.size() == 12, "expected 12 fixture blocks");
  for (const auto& [cmd, want] : cases) {
    std::vector<std::string> args;
    std::istringstream ss(cmd);
    for (std::string a; ss >> a;) args.push_back(a);
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    o.expect(code == 0 && out.str() == want, "mismatch for '" + cmd + "'");
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const RootDatum d = preset::gl(n);
    Integer oracle = 0;
    WeightSet pi_oracle;
    for (const IntVector& p : partitions(r, n)) {
      const Integer k = hook_content_dim(p, n);
      oracle += k * k;
      pi_oracle.insert(Weight(p));
    }
    const WeightSet pi = tensor_power_pi(d, module_highest_weight(d, "natural"), r);
    o.expect(pi == pi_oracle, "pi differs from the partitions of r");
    const Integer ds = dim_schur(d, pi);
    o.expect(ds == oracle, "dim_schur differs from the hook-content sum");
    const std::size_t cl = closure_dimension(model_for(d, pi));
    o.expect(Integer(static_cast<unsigned long>(cl)) == ds, "closure dimension differs from dim_schur for gl" +
                                                                 std::to_string(n) + " r=" + std::to_string(r));
    if (n == 2 && r == 2) o.expect(cl == 10, "gl2 r=2 closure is not 10");
    if (n == 2 && r == 3) o.expect(cl == 20, "gl2 r=3 closure is not 20");
    if (n == 3 && r == 2) o.expect(oracle == 45 && cl == 45, "gl3 r=2 closure is not 45");
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  struct C {
    RootDatum d;
    std::string module;
  };
  for (const C& c : {C{preset::gl(2), "natural"}, C{preset::gl(3), "natural"}, C{preset::sp(2), "natural"},
                     C{preset::so_odd(2), "spin"}}) {
    const std::string tag = c.d.name() + " " + c.module;
    const PointSet P = point_set(c.d, wpi_of(c.d, c.module, 2), make_h_basis(c.d, default_basis(c.d, true)), true);
    const auto fam = default_family(P.nvars());
    for (const IntVector& h : fam) {
      const KPolynomial f = generator_F(P, h, true);
      const KPolynomial g = generator_G(P, h, true);
      IntVector hminus(h.size());
      std::size_t nf = pairing_values(P, h, true).size();
      for (std::size_t a = 0; a < h.size(); ++a) hminus[a] = h[a] < 0 ? -h[a] : 0;
      KPolynomial km = k_monomial(hminus).pow(static_cast<unsigned>(nf));
      o.expect(km * f == g, tag + ": K_{h-}^N F_h != G_h");
      o.expect(!g.has_negative_exponents(), tag + ": G_h is not a polynomial");
      for (std::size_t k = 0; k < P.size(); ++k)
        o.expect(evaluate(f, P.exponents(k)).is_zero(), tag + ": F_h does not vanish");
    }
    std::vector<VLaurent> total(P.size(), 0);
    for (const Weight& lam : P.weights) {
      const Idempotent e = idempotent(P, lam);
      for (std::size_t k = 0; k < P.size(); ++k) {
        const VLaurent x = e.evaluate(P.exponents(k));
        total[k] += x;
        o.expect(x == VLaurent(P.weights[k] == lam ? 1 : 0), tag + ": 1_lambda is not a delta vector");
      }
    }
    for (const VLaurent& x : total) o.expect(x == VLaurent(1), tag + ": sum of idempotents is not 1");
    for (const IntVector& h : fam) {
      const ValueVector vals = evaluation_hom(P, k_monomial(h));
      for (std::size_t k = 0; k < P.size(); ++k) {
        const Rational ex = P.pairing(h, k);
        o.expect(vals[k] == VLaurent::monomial(static_cast<int>(ex.get_num().get_si())), tag + ": K_h values");
      }
    }
    o.expect(verify_vanishing(P, fam).passed(), tag + ": vanishing report");
    o.expect(verify_G_identity(P, fam).passed(), tag + ": G identity report");
    o.expect(verify_idempotents(P).passed(), tag + ": idempotent report");
    o.expect(all_passed(verify_zero_part_identities(c.d, P, fam)), tag + ": zero-part identities");
    for (std::size_t j = 0; j < c.d.num_simple(); ++j)
      o.expect(verify_shift_lemma(c.d, P, j).passed(), tag + ": shift lemma j=" + std::to_string(j));
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  for (const RootDatum& d : {preset::gl(2), preset::sp(2)}) {
    const WeightSet wpi = wpi_of(d, "natural", 2);
    WeightSet oracle;
    if (d.kind() == "gl")
      for (const IntVector& p : signed_compositions(2, 2)) {
        if (p[0] >= 0 && p[1] >= 0) oracle.insert(Weight(p));
      }
    else
      for (int j = 0; 2 - 2 * j >= 0; ++j) oracle.merge(from_eps(d, signed_compositions(2 - 2 * j, 2)));
    o.expect(wpi == oracle, d.name() + ": W pi differs from the enumeration");
    const PointSet P = point_set(d, wpi, make_h_basis(d, default_basis(d, true)), true);
    const ZeroSetReport z = verify_zero_set(d, P, 4);
    o.expect(z.radius == 4, "radius not honoured");
    o.expect(z.zero_set == oracle, d.name() + ": zero set differs from W pi");
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  const RootDatum b2 = preset::so_odd(2);
  const WeightSet b = wpi_of(b2, "natural", 1);
  WeightSet b_oracle = from_eps(b2, signed_compositions(1, 2));
  b_oracle.merge(from_eps(b2, signed_compositions(0, 2)));
  o.expect(b.size() == 5, "B2 natural r=1: |W pi| != 5");
  o.expect(b == b_oracle, "B2 natural r=1 differs from signed compositions of 1 and 0");
  for (const RootDatum& d : {preset::sp(2), preset::so_even(2)}) {
    for (int r = 1; r <= 3; ++r) {
      WeightSet oracle;
      for (int j = 0; r - 2 * j >= 0; ++j) oracle.merge(from_eps(d, signed_compositions(r - 2 * j, 2)));
      const WeightSet w = wpi_of(d, "natural", r);
      o.expect(w == oracle, d.name() + " natural r=" + std::to_string(r) + " differs from signed compositions");
      if (r == 2) o.expect(w.size() == 9, d.name() + " r=2: |W pi| != 9");
    }
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    const std::size_t sn = static_cast<std::size_t>(n);
    const RootDatum d = preset::so_odd(n);
    Weight spin = Weight::zero(sn);
    spin[sn - 1] = 1;
    const DominantMultiset sq = tensor_power_factors(d, spin, 2);
    DominantMultiset want;
    Integer total = 0;
    for (std::size_t k = 0; k <= sn; ++k) {
      Weight w = Weight::zero(sn);
      if (k > 0 && k < sn) w[k - 1] = 1;
      if (k == sn) w[sn - 1] = 2;
      want[w] = 1;
      Integer c;
      mpz_bin_uiui(c.get_mpz_t(), 2 * sn + 1, k);
      o.expect(weyl_dim(d, w) == c, "dim of the k-th exterior power for n=" + std::to_string(n));
    }
    for (const auto& [w, m] : sq) total += m * weyl_dim(d, w);
    o.expect(sq == want, "S (x) S factors for n=" + std::to_string(n));
    o.expect(total == Integer(1) << (2 * n), "S (x) S dimension for n=" + std::to_string(n));
    o.expect(check_spin_square(d).ok(), "spin square report for n=" + std::to_string(n));
    const int rmax = n == 2 ? 5 : 4;
    for (int r = 0; r <= rmax; ++r) {
      WeightSet expected;
      for (int m = 0; m <= r / 2; ++m) expected.merge(so_weights_of_norm(sn, m));
      if (r % 2 == 1) {
        WeightSet shifted;
        for (const Weight& w : expected) shifted.insert(w + spin);
        expected = shifted;
      }
      const DominantMultiset f = tensor_power_factors(d, spin, r);
      const WeightSet hw = highest_weights(f);
      const std::string tag = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      o.expect(hw == expected, tag + ": highest weights differ");
      o.expect(hw == dominant_weights(d, f), tag + ": not saturated");
    }
    o.expect(check_spin_saturation(d, rmax).ok(), "spin saturation report for n=" + std::to_string(n));
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  struct C {
    RootDatum d;
    std::string module;
  };
  const auto minuscule_oracle = [](const RootDatum& d, const Weight& v) {
    return Integer(static_cast<unsigned long>(orbit(d, v).size())) == weyl_dim(d, v);
  };
  for (const C& c : {C{preset::simply_connected('A', 2), "natural"}, C{preset::sp(2), "natural"},
                     C{preset::so_even(3), "natural"}, C{preset::so_odd(2), "spin"}}) {
    const Weight v = module_highest_weight(c.d, c.module);
    const ConjectureReport rep = conjecture_scan(c.d, v, 4);
    o.expect(minuscule_oracle(c.d, v) && rep.minuscule, c.d.name() + " " + c.module + " should be minuscule");
    o.expect(!rep.witness.has_value(), c.d.name() + " " + c.module + " should be saturated for r <= 4");
    for (const SaturationCheck& s : rep.per_r) o.expect(s.saturated, c.d.name() + " not saturated");
  }
  const RootDatum b2 = preset::so_odd(2);
  const ConjectureReport bn = conjecture_scan(b2, module_highest_weight(b2, "natural"), 4);
  o.expect(!bn.minuscule && !minuscule_oracle(b2, module_highest_weight(b2, "natural")), "B2 natural is minuscule?");
  if (bn.witness)
    std::cout << "  B2 natural: first non-saturated power r=" << *bn.witness << "\n";
  else
    o.fail("no non-saturation witness for the B2 natural module");
  const RootDatum a2 = preset::simply_connected('A', 2);
  const Weight adj = module_highest_weight(a2, "adjoint");
  o.expect(adj == Weight{1, 1}, "A2 adjoint highest weight");
  const ConjectureReport ad = conjecture_scan(a2, adj, 4);
  o.expect(!ad.minuscule && !minuscule_oracle(a2, adj), "A2 adjoint is minuscule?");
  std::cout << "  A2 adjoint L" << text(adj) << ":";
  for (const SaturationCheck& s : ad.per_r) std::cout << " r=" << s.r << (s.saturated ? " saturated" : " not saturated") << ";";
  std::cout << "\n";
  o.expect(ad.per_r.size() == 5, "A2 adjoint scan length");
  return o;
}

Outcome ac8() {
  Outcome o;
  for (const props::Result& r : props::all(200, 20261016)) {
    std::cout << "  " << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    o.expect(r.cases >= 200, r.name + ": fewer than 200 cases");
    o.expect(r.passed(), r.name + ": " + r.first_failure);
  }
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* id;
    double limit_s;
    Criterion fn;
  };
  const std::vector<Entry> entries{{"AC1", 1.0, ac1},  {"AC2", 10.0, ac2}, {"AC3", 10.0, ac3},
                                   {"AC4", 30.0, ac4}, {"AC5", 1.0, ac5},  {"AC6", 60.0, ac6},
                                   {"AC7", 120.0, ac7}, {"AC8", 600.0, ac8}};
  bool all = true;
  for (const Entry& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s >= e.limit_s) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(e.limit_s) + " s");
    all = all && o.ok;
    std::cout << e.id << " " << (o.ok ? "PASS" : "FAIL") << " (" << s << " s)";
    if (!o.ok) std::cout << ": " << o.note;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
