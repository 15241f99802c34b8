#include "schur/idealgen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace schur {

std::string to_string(BasisChoice b) {
  switch (b) {
    case BasisChoice::datum:
      return "datum";
    case BasisChoice::coroot:
      return "coroot";
    case BasisChoice::epsilon:
      return "epsilon";
  }
  return "?";
}

std::optional<BasisChoice> parse_basis_choice(const std::string& s) {
  if (s == "datum") return BasisChoice::datum;
  if (s == "coroot") return BasisChoice::coroot;
  if (s == "epsilon") return BasisChoice::epsilon;
  return std::nullopt;
}

bool HBasis::is_z_basis() const {
  if (!rows.is_integral()) return false;
  const Rational det = determinant(rows);
  return det == 1 || det == -1;
}

std::vector<Rational> HBasis::pair(const Weight& lambda) const {
  if (lambda.size() != rows.cols()) throw std::invalid_argument("weight length does not match the H-basis");
  std::vector<Rational> out(rows.rows());
  for (std::size_t a = 0; a < rows.rows(); ++a)
    for (std::size_t b = 0; b < rows.cols(); ++b) out[a] += rows(a, b) * static_cast<long>(lambda[b]);
  return out;
}

std::vector<Rational> HBasis::coordinates_of(const IntVector& y) const {
  auto inv = inverse(rows);
  if (!inv) throw std::logic_error("H-basis is singular");
  std::vector<Rational> out(rows.rows());
  for (std::size_t a = 0; a < rows.rows(); ++a)
    for (std::size_t b = 0; b < rows.cols(); ++b) out[a] += static_cast<long>(y[b]) * (*inv)(b, a);
  return out;
}

HBasis make_h_basis(const RootDatum& d, BasisChoice choice) {
  HBasis b;
  b.choice = choice;
  switch (choice) {
    case BasisChoice::datum:
      b.rows = QMatrix::identity(d.rank());
      break;
    case BasisChoice::coroot:
      if (d.num_simple() != d.rank())
        throw std::domain_error("coroot basis needs |I| = rank (the coroots do not span Y for " + d.name() + ")");
      b.rows = QMatrix::from_integers(d.simple_coroots());
      if (determinant(b.rows) == 0) throw std::domain_error("coroots are not a basis");
      break;
    case BasisChoice::epsilon:
      if (!d.has_epsilon()) throw std::domain_error("datum " + d.name() + " has no epsilon basis");
      b.rows = d.epsilon_matrix();
      break;
  }
  return b;
}

BasisChoice default_basis(const RootDatum& d, bool quantized) {
  if (d.has_epsilon()) {
    if (!quantized || make_h_basis(d, BasisChoice::epsilon).is_z_basis()) return BasisChoice::epsilon;
  }
  if (d.num_simple() == d.rank()) return BasisChoice::coroot;
  return BasisChoice::datum;
}

std::optional<std::size_t> PointSet::index_of(const Weight& w) const {
  auto it = std::lower_bound(weights.begin(), weights.end(), w);
  if (it == weights.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - weights.begin());
}

IntVector PointSet::exponents(std::size_t k) const {
  IntVector out(nvars());
  for (std::size_t a = 0; a < nvars(); ++a) {
    const Rational& x = coords.at(k)[a];
    if (x.get_den() != 1) throw std::domain_error("point " + to_string(weights[k]) + " has a non-integral coordinate");
    out[a] = x.get_num().get_si();
  }
  return out;
}

long PointSet::scale() const {
  Integer l = 1;
  for (const auto& c : coords)
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l.get_si();
}

Rational PointSet::pairing(const IntVector& h, std::size_t k) const {
  if (h.size() != nvars()) throw std::invalid_argument("h has the wrong number of H-coordinates");
  Rational s = 0;
  for (std::size_t a = 0; a < h.size(); ++a) s += static_cast<long>(h[a]) * coords[k][a];
  return s;
}

PointSet point_set(const RootDatum& d, const WeightSet& D, const HBasis& basis, bool quantized) {
  if (basis.rows.cols() != d.rank()) throw std::invalid_argument("H-basis does not match the datum rank");
  if (quantized && !basis.is_z_basis())
    throw std::domain_error("the " + to_string(basis.choice) + " basis is not a Z-basis of Y; the quantized path needs one");
  PointSet P;
  P.basis = basis;
  P.quantized = quantized;
  std::set<std::vector<Rational>> seen;
  for (const Weight& w : D) {
    P.weights.push_back(w);
    P.coords.push_back(basis.pair(w));
    if (!seen.insert(P.coords.back()).second) throw std::logic_error("two weights give the same point");
  }
  return P;
}

std::vector<Rational> pairing_values(const PointSet& P, const IntVector& h, bool reduced) {
  std::vector<Rational> vals;
  for (std::size_t k = 0; k < P.size(); ++k) vals.push_back(P.pairing(h, k));
  std::sort(vals.begin(), vals.end());
  if (reduced) vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

namespace {

int integral(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw std::domain_error(std::string(what) + " is not an integer: " + q.get_str());
  return static_cast<int>(q.get_num().get_si());
}

Exponents to_exponents(const IntVector& h) {
  Exponents e(h.size());
  for (std::size_t a = 0; a < h.size(); ++a) e[a] = static_cast<int>(h[a]);
  return e;
}

bool is_zero_vector(const IntVector& h) {
  return std::all_of(h.begin(), h.end(), [](std::int64_t x) { return x == 0; });
}

std::string v_power(int e) {
  if (e == 0) return "1";
  if (e == 1) return "v";
  return "v^" + std::to_string(e);
}

std::string k_mono(const IntVector& e) { return KPolynomial::monomial_string(to_exponents(e), "K"); }

// "H1 - H2", "2*H1", "-H1 + 1/2"; `constant` is added at the end.
std::string linear_form(const std::vector<Rational>& coeffs, const Rational& constant, const std::string& var,
                        std::size_t* pieces) {
  std::string out;
  std::size_t n = 0;
  auto emit = [&](const Rational& c, const std::string& body) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string b = body.empty() ? mag.get_str() : (mag == 1 ? body : mag.get_str() + "*" + body);
    if (n == 0)
      out += (neg ? "-" : "") + b;
    else
      out += (neg ? " - " : " + ") + b;
    ++n;
  };
  for (std::size_t a = 0; a < coeffs.size(); ++a)
    if (coeffs[a] != 0) emit(coeffs[a], var + std::to_string(a + 1));
  if (constant != 0 || n == 0) emit(constant, "");
  if (pieces) *pieces = n;
  return out;
}

std::string join_factors(const std::vector<std::pair<std::string, bool>>& factors) {
  // factors: (text, multi-term); equal neighbours are grouped with an exponent
  if (factors.size() == 1) return factors[0].first;
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j].first == factors[i].first) ++j;
    const std::size_t count = j - i;
    std::string f = factors[i].second ? "(" + factors[i].first + ")" : factors[i].first;
    if (count > 1) f += "^" + std::to_string(count);
    if (!out.empty()) out += "*";
    out += f;
    i = j;
  }
  return out;
}

}  // namespace

KPolynomial k_monomial(const IntVector& h) { return KPolynomial::monomial(to_exponents(h)); }

KPolynomial generator_F(const PointSet& P, const IntVector& h, bool reduced) {
  const std::size_t n = P.nvars();
  const KPolynomial kh = k_monomial(h);
  KPolynomial out = KPolynomial::constant(n, VLaurent(1));
  for (const Rational& val : pairing_values(P, h, reduced))
    out *= kh - KPolynomial::constant(n, VLaurent::monomial(integral(val, "<h, lambda>")));
  return out;
}

KPolynomial generator_G(const PointSet& P, const IntVector& h, bool reduced) {
  const std::size_t n = P.nvars();
  IntVector plus(n), minus_neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    plus[a] = std::max<std::int64_t>(h[a], 0);
    minus_neg[a] = std::max<std::int64_t>(-h[a], 0);
  }
  const KPolynomial kp = k_monomial(plus);
  const KPolynomial km = k_monomial(minus_neg);
  KPolynomial out = KPolynomial::constant(n, VLaurent(1));
  for (const Rational& val : pairing_values(P, h, reduced))
    out *= kp - km.scaled(VLaurent::monomial(integral(val, "<h, lambda>")));
  return out;
}

HPolynomial classical_generator(const PointSet& P, const IntVector& h, bool reduced) {
  const std::size_t n = P.nvars();
  HPolynomial lin(n);
  for (std::size_t a = 0; a < n; ++a)
    if (h[a] != 0) lin += HPolynomial::variable(n, a).scaled(Rational(static_cast<long>(h[a])));
  HPolynomial out = HPolynomial::constant(n, Rational(1));
  for (const Rational& val : pairing_values(P, h, reduced)) out *= lin - HPolynomial::constant(n, val);
  return out;
}

std::string factored_G(const PointSet& P, const IntVector& h, bool reduced) {
  if (is_zero_vector(h)) return "0";
  const std::size_t n = P.nvars();
  IntVector plus(n), minus_neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    plus[a] = std::max<std::int64_t>(h[a], 0);
    minus_neg[a] = std::max<std::int64_t>(-h[a], 0);
  }
  std::string lhs = k_mono(plus);
  if (lhs.empty()) lhs = "1";
  const std::string km = k_mono(minus_neg);
  std::vector<std::pair<std::string, bool>> factors;
  for (const Rational& val : pairing_values(P, h, reduced)) {
    const int e = integral(val, "<h, lambda>");
    std::string rhs;
    if (km.empty())
      rhs = v_power(e);
    else
      rhs = e == 0 ? km : v_power(e) + "*" + km;
    factors.emplace_back(lhs + " - " + rhs, true);
  }
  return join_factors(factors);
}

std::string factored_F(const PointSet& P, const IntVector& h, bool reduced) {
  if (is_zero_vector(h)) return "0";
  const std::string kh = k_mono(h);
  std::vector<std::pair<std::string, bool>> factors;
  for (const Rational& val : pairing_values(P, h, reduced))
    factors.emplace_back(kh + " - " + v_power(integral(val, "<h, lambda>")), true);
  return join_factors(factors);
}

std::string factored_classical(const PointSet& P, const IntVector& h, bool reduced) {
  if (is_zero_vector(h)) return "0";
  std::vector<Rational> coeffs(h.size());
  for (std::size_t a = 0; a < h.size(); ++a) coeffs[a] = static_cast<long>(h[a]);
  std::vector<std::pair<std::string, bool>> factors;
  for (const Rational& val : pairing_values(P, h, reduced)) {
    std::size_t pieces = 0;
    std::string f = linear_form(coeffs, -val, "H", &pieces);
    factors.emplace_back(f, pieces > 1);
  }
  return join_factors(factors);
}

VLaurent evaluate(const KPolynomial& p, const IntVector& exps) {
  VLaurent out;
  for (const auto& [e, c] : p.terms()) {
    if (e.size() != exps.size()) throw std::invalid_argument("point has the wrong dimension");
    std::int64_t s = 0;
    for (std::size_t a = 0; a < e.size(); ++a) s += static_cast<std::int64_t>(e[a]) * exps[a];
    out += c * VLaurent::monomial(static_cast<int>(s));
  }
  return out;
}

Rational evaluate(const HPolynomial& p, const std::vector<Rational>& point) {
  Rational out = 0;
  for (const auto& [e, c] : p.terms()) {
    if (e.size() != point.size()) throw std::invalid_argument("point has the wrong dimension");
    Rational t = c;
    for (std::size_t a = 0; a < e.size(); ++a) {
      if (e[a] < 0) throw std::domain_error("classical polynomial with a negative exponent");
      for (int k = 0; k < e[a]; ++k) t *= point[a];
    }
    out += t;
  }
  return out;
}

ValueVector evaluation_hom(const PointSet& P, const KPolynomial& p) {
  ValueVector out;
  out.reserve(P.size());
  for (std::size_t k = 0; k < P.size(); ++k) out.push_back(evaluate(p, P.exponents(k)));
  return out;
}

VLaurent Idempotent::evaluate(const IntVector& exps) const {
  if (exps.size() != roots.size()) throw std::invalid_argument("point has the wrong dimension");
  VLaurent num = scalar;
  for (std::size_t a = 0; a < roots.size() && !num.is_zero(); ++a)
    for (std::int64_t r : roots[a]) {
      if (r == exps[a]) return VLaurent();
      num *= VLaurent::monomial(static_cast<int>(exps[a])) - VLaurent::monomial(static_cast<int>(r));
    }
  auto q = num.divide_exact(denominator);
  if (!q) throw std::domain_error("idempotent value is not a Laurent polynomial at this point");
  return *q;
}

KPolynomial Idempotent::numerator() const {
  const std::size_t n = roots.size();
  KPolynomial out = KPolynomial::constant(n, scalar);
  for (std::size_t a = 0; a < n; ++a)
    for (std::int64_t r : roots[a])
      out *= KPolynomial::variable(n, a) - KPolynomial::constant(n, VLaurent::monomial(static_cast<int>(r)));
  return out;
}

Idempotent idempotent(const PointSet& P, const Weight& lambda) {
  auto idx = P.index_of(lambda);
  if (!idx) throw std::invalid_argument("idempotent: " + to_string(lambda) + " is not in the point set");
  const IntVector x = P.exponents(*idx);
  Idempotent e;
  e.lambda = lambda;
  e.roots.assign(P.nvars(), {});
  for (std::size_t k = 0; k < P.size(); ++k) {
    const IntVector y = P.exponents(k);
    for (std::size_t a = 0; a < P.nvars(); ++a)
      if (y[a] != x[a]) e.roots[a].push_back(y[a]);
  }
  VLaurent c(1);
  for (std::size_t a = 0; a < P.nvars(); ++a)
    for (std::int64_t r : e.roots[a])
      c *= VLaurent::monomial(static_cast<int>(x[a])) - VLaurent::monomial(static_cast<int>(r));
  e.denominator = c;
  return e;
}

Rational ClassicalIdempotent::evaluate(const std::vector<Rational>& point) const {
  Rational num = 1;
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (const Rational& r : roots[a]) num *= point[a] - r;
  return num / denominator;
}

HPolynomial ClassicalIdempotent::numerator() const {
  const std::size_t n = roots.size();
  HPolynomial out = HPolynomial::constant(n, Rational(1));
  for (std::size_t a = 0; a < n; ++a)
    for (const Rational& r : roots[a]) out *= HPolynomial::variable(n, a) - HPolynomial::constant(n, r);
  return out;
}

ClassicalIdempotent classical_idempotent(const PointSet& P, const Weight& lambda) {
  auto idx = P.index_of(lambda);
  if (!idx) throw std::invalid_argument("idempotent: " + to_string(lambda) + " is not in the point set");
  const auto& x = P.coords[*idx];
  ClassicalIdempotent e;
  e.lambda = lambda;
  e.roots.assign(P.nvars(), {});
  for (std::size_t k = 0; k < P.size(); ++k)
    for (std::size_t a = 0; a < P.nvars(); ++a)
      if (P.coords[k][a] != x[a]) e.roots[a].push_back(P.coords[k][a]);
  Rational c = 1;
  for (std::size_t a = 0; a < P.nvars(); ++a)
    for (const Rational& r : e.roots[a]) c *= x[a] - r;
  e.denominator = c;
  return e;
}

IntVector root_exponents(const RootDatum& d, const HBasis& basis, std::size_t j) {
  IntVector out;
  for (const Rational& q : basis.pair(d.alpha(j))) out.push_back(integral(q, "<H_a, alpha_j>"));
  return out;
}

KPolynomial shift_substitute(const KPolynomial& p, const IntVector& alpha_exps, int sign) {
  KPolynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    std::int64_t s = 0;
    for (std::size_t a = 0; a < e.size(); ++a) s += static_cast<std::int64_t>(e[a]) * alpha_exps[a];
    out.add_term(e, c * VLaurent::monomial(static_cast<int>(sign * s)));
  }
  return out;
}

Idempotent shift_substitute(const Idempotent& e, const IntVector& alpha_exps, int sign) {
  // (v^t K_a - v^r) = v^t (K_a - v^{r-t})
  Idempotent out = e;
  for (std::size_t a = 0; a < e.roots.size(); ++a) {
    const std::int64_t t = sign * alpha_exps[a];
    for (auto& r : out.roots[a]) {
      r -= t;
      out.scalar *= VLaurent::monomial(static_cast<int>(t));
    }
  }
  return out;
}

WeightSet enlarged_set(const RootDatum& d, const WeightSet& w_pi) {
  WeightSet D = w_pi;
  for (const Weight& w : w_pi)
    for (std::size_t j = 0; j < d.num_simple(); ++j) {
      D.insert(w + d.alpha(j));
      D.insert(w - d.alpha(j));
    }
  return D;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

std::vector<IntVector> default_family(std::size_t n) {
  std::vector<IntVector> fam;
  fam.emplace_back(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    IntVector h(n, 0);
    h[a] = 1;
    fam.push_back(h);
  }
  for (std::size_t a = 0; a < n; ++a) {
    IntVector h(n, 0);
    h[a] = -1;
    fam.push_back(h);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      IntVector h(n, 0);
      h[a] = 1;
      h[b] = -1;
      fam.push_back(h);
    }
  std::vector<IntVector> out;
  for (auto& h : fam)
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  return out;
}

namespace {

std::vector<IntVector> sign_choices(std::size_t n) {
  // J = +-H_1 +- ... +- H_n, all-plus first
  std::vector<IntVector> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IntVector h(n);
    for (std::size_t a = 0; a < n; ++a) h[a] = (mask >> (n - 1 - a)) & 1 ? -1 : 1;
    out.push_back(h);
  }
  return out;
}

std::vector<IntVector> unit_vectors(std::size_t n) {
  std::vector<IntVector> out;
  for (std::size_t a = 0; a < n; ++a) {
    IntVector h(n, 0);
    h[a] = 1;
    out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<IntVector> preset_family(const RootDatum& d, BasisChoice basis, const std::string& module) {
  const std::size_t n = d.rank();
  const std::string& kind = d.kind();
  const bool eps = basis == BasisChoice::epsilon && d.has_epsilon();
  if (eps && kind == "gl" && module == "natural") {
    std::vector<IntVector> fam{IntVector(n, 1)};
    for (auto& h : unit_vectors(n)) fam.push_back(h);
    return fam;
  }
  if (eps && module == "natural" && (kind == "C" || kind == "D")) return sign_choices(n);
  if (eps && module == "natural" && kind == "B") {
    auto fam = unit_vectors(n);
    for (auto& h : sign_choices(n)) fam.push_back(h);
    return fam;
  }
  if (eps && module == "spin" && kind == "B") return unit_vectors(n);
  return default_family(n);
}

std::vector<IntVector> verification_family(std::size_t n, const std::vector<IntVector>& extra) {
  std::set<IntVector> fam(extra.begin(), extra.end());
  IntVector h(n, -1);
  for (;;) {
    if (!is_zero_vector(h)) fam.insert(h);
    std::size_t a = 0;
    while (a < n && h[a] == 1) h[a++] = -1;
    if (a == n) break;
    ++h[a];
  }
  return {fam.begin(), fam.end()};
}

namespace {

std::string hstr(const IntVector& h) {
  std::string s = "h=(";
  for (std::size_t a = 0; a < h.size(); ++a) s += (a ? "," : "") + std::to_string(h[a]);
  return s + ")";
}

void expect(CheckReport& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) r.failures.push_back(what);
}

}  // namespace

CheckReport verify_vanishing(const PointSet& P, const std::vector<IntVector>& family) {
  CheckReport r{"F_h vanishes on the point set", 0, {}};
  for (const IntVector& h : family)
    for (bool reduced : {true, false}) {
      if (P.quantized) {
        const KPolynomial F = generator_F(P, h, reduced);
        const KPolynomial G = generator_G(P, h, reduced);
        for (std::size_t k = 0; k < P.size(); ++k) {
          const IntVector x = P.exponents(k);
          expect(r, evaluate(F, x).is_zero(), hstr(h) + " F at " + to_string(P.weights[k]));
          expect(r, evaluate(G, x).is_zero(), hstr(h) + " G at " + to_string(P.weights[k]));
        }
      } else {
        const HPolynomial F = classical_generator(P, h, reduced);
        for (std::size_t k = 0; k < P.size(); ++k)
          expect(r, evaluate(F, P.coords[k]) == 0, hstr(h) + " at " + to_string(P.weights[k]));
      }
    }
  return r;
}

CheckReport verify_G_identity(const PointSet& P, const std::vector<IntVector>& family) {
  CheckReport r{"K_{h-}^N G_h = F_h", 0, {}};
  for (const IntVector& h : family)
    for (bool reduced : {true, false}) {
      const KPolynomial F = generator_F(P, h, reduced);
      const KPolynomial G = generator_G(P, h, reduced);
      const auto N = static_cast<std::int64_t>(pairing_values(P, h, reduced).size());
      IntVector neg(h.size());
      for (std::size_t a = 0; a < h.size(); ++a) neg[a] = N * std::min<std::int64_t>(h[a], 0);
      expect(r, k_monomial(neg) * G == F, hstr(h) + (reduced ? " reduced" : " full") + " identity");
      expect(r, !G.has_negative_exponents(), hstr(h) + " G has a negative exponent");
    }
  return r;
}

CheckReport verify_idempotents(const PointSet& P) {
  CheckReport r{"idempotents: deltas, partition of unity, orthogonality", 0, {}};
  std::vector<ValueVector> vals;
  for (const Weight& lam : P.weights) {
    const Idempotent e = idempotent(P, lam);
    ValueVector vv;
    for (std::size_t k = 0; k < P.size(); ++k) vv.push_back(e.evaluate(P.exponents(k)));
    vals.push_back(std::move(vv));
  }
  for (std::size_t l = 0; l < P.size(); ++l)
    for (std::size_t k = 0; k < P.size(); ++k)
      expect(r, vals[l][k] == VLaurent(l == k ? 1 : 0), "1_" + to_string(P.weights[l]) + " at " + to_string(P.weights[k]));
  for (std::size_t k = 0; k < P.size(); ++k) {
    VLaurent s;
    for (std::size_t l = 0; l < P.size(); ++l) s += vals[l][k];
    expect(r, s == VLaurent(1), "sum of idempotents at " + to_string(P.weights[k]));
  }
  for (std::size_t l = 0; l < P.size(); ++l)
    for (std::size_t m = 0; m < P.size(); ++m)
      for (std::size_t k = 0; k < P.size(); ++k)
        expect(r, vals[l][k] * vals[m][k] == VLaurent(l == m && l == k ? 1 : 0),
               "1_" + to_string(P.weights[l]) + " 1_" + to_string(P.weights[m]));
  // symbolic products 1_l 1_l and 1_l 1_{l+1} while the expansions stay small
  for (std::size_t l = 0; l < P.size(); ++l) {
    const Idempotent a = idempotent(P, P.weights[l]);
    const KPolynomial na = a.numerator();
    for (std::size_t m = l; m < std::min(l + 2, P.size()); ++m) {
      const Idempotent b = idempotent(P, P.weights[m]);
      const KPolynomial nb = b.numerator();
      if (na.size() * nb.size() > 2500) continue;
      const KPolynomial prod = na * nb;
      const VLaurent den = a.denominator * b.denominator;
      for (std::size_t k = 0; k < P.size(); ++k) {
        auto q = evaluate(prod, P.exponents(k)).divide_exact(den);
        expect(r, q && *q == VLaurent(l == m && l == k ? 1 : 0),
               "symbolic product 1_" + to_string(P.weights[l]) + " 1_" + to_string(P.weights[m]));
      }
    }
  }
  return r;
}

CheckReport verify_classical_idempotents(const PointSet& P) {
  CheckReport r{"classical idempotents: deltas, partition of unity", 0, {}};
  std::vector<Rational> sum(P.size());
  for (const Weight& lam : P.weights) {
    const ClassicalIdempotent e = classical_idempotent(P, lam);
    const HPolynomial num = e.numerator();
    for (std::size_t k = 0; k < P.size(); ++k) {
      const Rational val = e.evaluate(P.coords[k]);
      sum[k] += val;
      expect(r, val == (P.weights[k] == lam ? 1 : 0), "1_" + to_string(lam) + " at " + to_string(P.weights[k]));
      expect(r, evaluate(num, P.coords[k]) / e.denominator == val, "expanded 1_" + to_string(lam));
    }
  }
  for (std::size_t k = 0; k < P.size(); ++k)
    expect(r, sum[k] == 1, "sum of idempotents at " + to_string(P.weights[k]));
  return r;
}

std::vector<CheckReport> verify_zero_part_identities(const RootDatum& d, const PointSet& P,
                                                     const std::vector<IntVector>& family) {
  std::vector<CheckReport> out;
  const std::size_t N = P.size();
  std::vector<IntVector> x;
  for (std::size_t k = 0; k < N; ++k) x.push_back(P.exponents(k));
  std::vector<ValueVector> idem(N);
  for (std::size_t l = 0; l < N; ++l) {
    const Idempotent e = idempotent(P, P.weights[l]);
    for (std::size_t k = 0; k < N; ++k) idem[l].push_back(e.evaluate(x[k]));
  }

  CheckReport mult{"K_h K_h' = K_{h+h'}", 0, {}};
  for (const IntVector& h : family)
    for (const IntVector& g : family) {
      IntVector s(h.size());
      for (std::size_t a = 0; a < h.size(); ++a) s[a] = h[a] + g[a];
      const KPolynomial lhs = k_monomial(h) * k_monomial(g);
      const KPolynomial rhs = k_monomial(s);
      expect(mult, lhs == rhs, hstr(h) + " " + hstr(g) + " symbolic");
      expect(mult, evaluation_hom(P, lhs) == evaluation_hom(P, rhs), hstr(h) + " " + hstr(g) + " values");
    }
  out.push_back(std::move(mult));

  CheckReport kh{"K_h = sum v^<h,lambda> 1_lambda", 0, {}};
  for (const IntVector& h : family) {
    const ValueVector lhs = evaluation_hom(P, k_monomial(h));
    for (std::size_t k = 0; k < N; ++k) {
      VLaurent rhs;
      for (std::size_t l = 0; l < N; ++l)
        rhs += VLaurent::monomial(integral(P.pairing(h, l), "<h, lambda>")) * idem[l][k];
      expect(kh, lhs[k] == rhs, hstr(h) + " at " + to_string(P.weights[k]));
    }
  }
  out.push_back(std::move(kh));

  out.push_back(verify_idempotents(P));

  CheckReport comm{"(K~_i - K~_-i)/(v_i - v_i^-1) = sum [<h_i,lambda>]_i 1_lambda", 0, {}};
  for (std::size_t i = 0; i < d.num_simple(); ++i) {
    const int di = d.d(i);
    const std::vector<Rational> hc = P.basis.coordinates_of(d.coroot(i));
    IntVector up(hc.size()), down(hc.size());
    for (std::size_t a = 0; a < hc.size(); ++a) {
      up[a] = di * integral(hc[a], "coordinate of h_i");
      down[a] = -up[a];
    }
    const KPolynomial numer = k_monomial(up) - k_monomial(down);
    const VLaurent den = VLaurent::monomial(di) - VLaurent::monomial(-di);
    const ValueVector lhs_num = evaluation_hom(P, numer);
    for (std::size_t k = 0; k < N; ++k) {
      auto lhs = lhs_num[k].divide_exact(den);
      const VLaurent expected = qint(static_cast<long>(d.coroot_pairing(i, P.weights[k]))).specialize(di);
      VLaurent rhs;
      for (std::size_t l = 0; l < N; ++l)
        rhs += qint(static_cast<long>(d.coroot_pairing(i, P.weights[l]))).specialize(di) * idem[l][k];
      expect(comm, lhs && *lhs == expected && rhs == expected,
             "i=" + std::to_string(i + 1) + " at " + to_string(P.weights[k]));
    }
  }
  out.push_back(std::move(comm));
  return out;
}

CheckReport verify_shift_lemma(const RootDatum& d, const PointSet& P, std::size_t j) {
  CheckReport r{"shift lemma, j=" + std::to_string(j + 1), 0, {}};
  const WeightSet w_pi(P.weights.begin(), P.weights.end());
  const PointSet PD = point_set(d, enlarged_set(d, w_pi), P.basis, true);
  const IntVector t = root_exponents(d, P.basis, j);
  for (const Weight& lam : P.weights) {
    const Idempotent e = idempotent(PD, lam);
    for (int sign : {-1, 1}) {
      const Idempotent s = shift_substitute(e, t, sign);
      const Weight target = lam - sign * d.alpha(j);
      for (std::size_t k = 0; k < P.size(); ++k) {
        const VLaurent got = s.evaluate(P.exponents(k));
        const VLaurent want(P.weights[k] == target ? 1 : 0);
        const VLaurent direct = e.evaluate(PD.exponents(*PD.index_of(P.weights[k] + sign * d.alpha(j))));
        expect(r, got == want && got == direct,
               "1_" + to_string(lam) + " sign " + std::to_string(sign) + " at " + to_string(P.weights[k]));
      }
    }
  }
  return r;
}

CheckReport verify_classical_specialization(const RootDatum& d, const PointSet& P, const std::vector<IntVector>& family) {
  CheckReport r{"v = 1 limit of F_h matches the classical generator", 0, {}};
  const WeightSet w_pi(P.weights.begin(), P.weights.end());
  const PointSet PD = point_set(d, enlarged_set(d, w_pi), P.basis, true);
  const VLaurent v_minus_1 = VLaurent::monomial(1) - VLaurent(1);
  for (const IntVector& h : family) {
    const KPolynomial F = generator_F(P, h, true);
    const HPolynomial C = classical_generator(P, h, true);
    const auto N = static_cast<unsigned>(pairing_values(P, h, true).size());
    const VLaurent scale = v_minus_1.pow(N);
    for (std::size_t k = 0; k < PD.size(); ++k) {
      const VLaurent val = evaluate(F, PD.exponents(k));
      auto q = val.divide_exact(scale);
      expect(r, q && q->eval_at_one() == evaluate(C, PD.coords[k]), hstr(h) + " at " + to_string(PD.weights[k]));
    }
  }
  return r;
}

ZeroSetReport verify_zero_set(const RootDatum& d, const PointSet& P, long radius) {
  ZeroSetReport rep;
  const std::size_t n = P.nvars();
  const std::size_t rank = d.rank();
  rep.expected = WeightSet(P.weights.begin(), P.weights.end());
  if (radius <= 0) {
    std::int64_t m = 0;
    for (const Weight& w : P.weights)
      for (std::size_t a = 0; a < rank; ++a) m = std::max<std::int64_t>(m, w[a] < 0 ? -w[a] : w[a]);
    radius = std::max<long>(1, 2 * static_cast<long>(m));
  }
  rep.radius = radius;
  rep.family = verification_family(n, {});

  std::vector<Weight> box;
  Weight w = Weight::zero(rank);
  for (std::size_t a = 0; a < rank; ++a) w[a] = -radius;
  for (;;) {
    box.push_back(w);
    std::size_t a = 0;
    while (a < rank && w[a] == radius) w[a++] = -radius;
    if (a == rank) break;
    ++w[a];
  }
  rep.box_points = box.size();

  // zero test of one h at one point, via the actual generator polynomial
  std::map<IntVector, KPolynomial> cache;
  auto vanishes_with = [&](const IntVector& h, const Weight& lam) {
    if (P.quantized) {
      auto it = cache.find(h);
      if (it == cache.end()) it = cache.emplace(h, generator_F(P, h, true)).first;
      std::vector<Rational> c = P.basis.pair(lam);
      IntVector x;
      for (auto& q : c) x.push_back(integral(q, "box point coordinate"));
      return evaluate(it->second, x).is_zero();
    }
    return evaluate(classical_generator(P, h, true), P.basis.pair(lam)) == 0;
  };
  auto in_zero_set = [&](const Weight& lam) {
    for (const IntVector& h : rep.family)
      if (!vanishes_with(h, lam)) return false;
    return true;
  };

  for (const Weight& lam : box) {
    if (!in_zero_set(lam)) continue;
    if (rep.expected.count(lam)) continue;
    // separate lam by a generic h: <h, lam> outside the values on W pi
    bool found = false;
    for (std::int64_t bound = 1; bound <= 4 && !found; ++bound) {
      IntVector h(n, -bound);
      for (;;) {
        const Rational val = [&] {
          auto c = P.basis.pair(lam);
          Rational s = 0;
          for (std::size_t a = 0; a < n; ++a) s += static_cast<long>(h[a]) * c[a];
          return s;
        }();
        const auto vals = pairing_values(P, h, true);
        if (!is_zero_vector(h) && !std::binary_search(vals.begin(), vals.end(), val)) {
          rep.family.push_back(h);
          rep.generic.push_back(h);
          found = true;
          break;
        }
        std::size_t a = 0;
        while (a < n && h[a] == bound) h[a++] = -bound;
        if (a == n) break;
        ++h[a];
      }
    }
  }
  for (const Weight& lam : box)
    if (in_zero_set(lam)) rep.zero_set.insert(lam);
  return rep;
}

namespace {

KPolynomial derivative(const KPolynomial& p, std::size_t b) {
  KPolynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[b] == 0) continue;
    Exponents f = e;
    --f[b];
    out.add_term(f, c * VLaurent(static_cast<long>(e[b])));
  }
  return out;
}

VLaurent leibniz_det(const std::vector<std::vector<VLaurent>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  VLaurent det;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    VLaurent t(sign);
    for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t *= m[i][perm[i]];
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

JacobianReport jacobian_spot_check(const PointSet& P, const Weight& lambda) {
  JacobianReport rep;
  rep.lambda = lambda;
  auto idx = P.index_of(lambda);
  if (!idx) throw std::invalid_argument("jacobian_spot_check: " + to_string(lambda) + " is not in the point set");
  const std::size_t n = P.nvars();
  const IntVector x = P.exponents(*idx);
  std::vector<IntVector> diffs;
  for (std::size_t k = 0; k < P.size(); ++k) {
    if (k == *idx) continue;
    IntVector y = P.exponents(k), dlt(n);
    for (std::size_t a = 0; a < n; ++a) dlt[a] = x[a] - y[a];
    diffs.push_back(dlt);
  }
  IntMatrix C(n, IntVector(n, 0));
  for (std::size_t a = 0; a < n; ++a) C[a][a] = 1;
  // greedy row repair: c(a) += m c(b) until c(a) lies on no hyperplane S_mu
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t guard = 0; guard < 10 * diffs.size() + 10; ++guard) {
      auto bad = std::find_if(diffs.begin(), diffs.end(), [&](const IntVector& dl) { return dot(C[a], dl) == 0; });
      if (bad == diffs.end()) break;
      std::size_t b = 0;
      while (b < n && (b == a || dot(C[b], *bad) == 0)) ++b;
      if (b == n) throw std::logic_error("no row off the hyperplane; C is singular");
      for (std::int64_t m = 1;; ++m) {
        IntVector cand = C[a];
        for (std::size_t k = 0; k < n; ++k) cand[k] += m * C[b][k];
        const bool keeps = std::all_of(diffs.begin(), diffs.end(),
                                       [&](const IntVector& dl) { return dot(C[a], dl) == 0 || dot(cand, dl) != 0; });
        if (keeps) {
          C[a] = cand;
          break;
        }
      }
    }
  }
  rep.c = C;
  rep.det_c = integer_determinant(C);
  rep.separating = true;
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& dl : diffs)
      if (dot(C[a], dl) == 0) rep.separating = false;

  std::vector<std::vector<VLaurent>> J(n, std::vector<VLaurent>(n));
  std::int64_t shift = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const std::int64_t val = dot(C[a], x);
    shift += val;
    const KPolynomial f =
        k_monomial(C[a]) - KPolynomial::constant(n, VLaurent::monomial(static_cast<int>(val)));
    for (std::size_t b = 0; b < n; ++b) J[a][b] = evaluate(derivative(f, b), x);
  }
  for (std::size_t b = 0; b < n; ++b) shift -= x[b];
  rep.det_jacobian = leibniz_det(J);
  rep.expected = VLaurent::monomial(static_cast<int>(shift), Rational(rep.det_c));
  return rep;
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

std::string v_times(const Rational& t, const std::string& body) {
  if (t == 0) return body;
  return v_power(integral(t, "<H_a, alpha_i>")) + "*" + body;
}

std::string scaled(const Rational& t, const std::string& body) {
  if (t == 0) return "0";
  if (t == 1) return body;
  if (t == -1) return "-" + body;
  return t.get_str() + "*" + body;
}

std::string serre(const std::string& x, std::size_t i, std::size_t j, std::int64_t aij, bool quantized) {
  const std::int64_t N = 1 - aij;
  if (!quantized) return "(ad " + x + idx(i) + ")^" + std::to_string(N) + " " + x + idx(j) + " = 0";
  std::string out;
  for (std::int64_t s = N; s >= 0; --s) {
    const std::int64_t sp = N - s;
    std::vector<std::string> parts;
    auto power = [&](std::int64_t k) {
      if (k == 0) return;
      parts.push_back(x + idx(i) + (k == 1 ? "" : "^(" + std::to_string(k) + ")"));
    };
    power(s);
    parts.push_back(x + idx(j));
    power(sp);
    std::string term;
    for (std::size_t k = 0; k < parts.size(); ++k) term += (k ? "*" : "") + parts[k];
    const bool neg = sp % 2 == 1;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out + " = 0";
}

}  // namespace

PresentationReport presentation(const RootDatum& d, const PointSet& P, const std::vector<IntVector>& family,
                                bool reduced) {
  PresentationReport rep;
  rep.datum = d.name();
  rep.quantized = P.quantized;
  rep.basis = P.basis.choice;
  const std::size_t m = d.num_simple();
  const std::size_t n = P.nvars();
  const bool q = P.quantized;
  const std::string E = q ? "E" : "e", F = q ? "F" : "f";

  for (std::size_t i = 0; i < m; ++i) rep.generators.push_back(E + idx(i));
  for (std::size_t i = 0; i < m; ++i) rep.generators.push_back(F + idx(i));
  for (std::size_t a = 0; a < n; ++a) rep.generators.push_back((q ? "K" : "H") + idx(a));
  if (q)
    for (std::size_t a = 0; a < n; ++a) rep.generators.push_back("K" + idx(a) + "^-1");

  if (q) {
    rep.relations.push_back("K_a*K_b = K_b*K_a, K_a*K_a^-1 = 1 (a, b = 1.." + std::to_string(n) + ")");
  } else {
    rep.relations.push_back("[H_a, H_b] = 0 (a, b = 1.." + std::to_string(n) + ")");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < m; ++i) {
      const Rational t = P.basis.pair(d.alpha(i))[a];
      if (q) {
        rep.relations.push_back("K" + idx(a) + "*E" + idx(i) + " = " + v_times(t, "E" + idx(i) + "*K" + idx(a)));
        rep.relations.push_back("K" + idx(a) + "*F" + idx(i) + " = " + v_times(-t, "F" + idx(i) + "*K" + idx(a)));
      } else {
        rep.relations.push_back("[H" + idx(a) + ", e" + idx(i) + "] = " + scaled(t, "e" + idx(i)));
        rep.relations.push_back("[H" + idx(a) + ", f" + idx(i) + "] = " + scaled(-t, "f" + idx(i)));
      }
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::string lhs =
          q ? "E" + idx(i) + "*F" + idx(j) + " - F" + idx(j) + "*E" + idx(i) : "[e" + idx(i) + ", f" + idx(j) + "]";
      if (i != j) {
        rep.relations.push_back(lhs + " = 0");
        continue;
      }
      const std::vector<Rational> hc = P.basis.coordinates_of(d.coroot(i));
      if (q) {
        const int di = d.d(i);
        IntVector up(n);
        for (std::size_t a = 0; a < n; ++a) up[a] = di * integral(hc[a], "coordinate of h_i");
        IntVector down(n);
        for (std::size_t a = 0; a < n; ++a) down[a] = -up[a];
        rep.relations.push_back(lhs + " = (" + k_mono(up) + " - " + k_mono(down) + ")/(" + v_power(di) + " - " +
                                v_power(-di) + ")");
      } else {
        rep.relations.push_back(lhs + " = " + linear_form(hc, 0, "H", nullptr));
      }
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      rep.relations.push_back(serre(E, i, j, d.cartan_matrix()[i][j], q));
      rep.relations.push_back(serre(F, i, j, d.cartan_matrix()[i][j], q));
    }

  for (const IntVector& h : family) {
    if (h.size() != n) throw std::invalid_argument("family element has the wrong length");
    if (is_zero_vector(h)) continue;
    IdealGenerator g;
    g.h = h;
    if (q) {
      g.k_poly = generator_F(P, h, reduced);
      g.factored = factored_F(P, h, reduced);
      g.g_poly = generator_G(P, h, reduced);
      g.factored_polynomial = factored_G(P, h, reduced);
      for (std::size_t k = 0; k < P.size(); ++k)
        if (!evaluate(g.k_poly, P.exponents(k)).is_zero())
          throw std::logic_error("generator " + g.factored + " does not vanish at " + to_string(P.weights[k]));
    } else {
      g.h_poly = classical_generator(P, h, reduced);
      g.factored = factored_classical(P, h, reduced);
      for (std::size_t k = 0; k < P.size(); ++k)
        if (evaluate(g.h_poly, P.coords[k]) != 0)
          throw std::logic_error("generator " + g.factored + " does not vanish at " + to_string(P.weights[k]));
    }
    rep.ideal.push_back(std::move(g));
  }
  return rep;
}

}  // namespace schur
