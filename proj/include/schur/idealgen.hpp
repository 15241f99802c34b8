#pragma once

#include "schur/characters.hpp"
#include "schur/laurent.hpp"
#include "schur/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schur {

enum class BasisChoice { datum, coroot, epsilon };

std::string to_string(BasisChoice b);
std::optional<BasisChoice> parse_basis_choice(const std::string& s);

/// The basis {H_1..H_n} used for the K_a / H_a variables. Row a holds H_a in Y-basis coordinates.
struct HBasis {
  BasisChoice choice = BasisChoice::datum;
  QMatrix rows;

  std::size_t size() const { return rows.rows(); }
  /// Integral with determinant +-1, i.e. a Z-basis of Y.
  bool is_z_basis() const;
  /// <H_a, lambda> for every a.
  std::vector<Rational> pair(const Weight& lambda) const;
  /// Coordinates in the H-basis of an element of Y given in Y-basis coordinates.
  std::vector<Rational> coordinates_of(const IntVector& y) const;
};

HBasis make_h_basis(const RootDatum& d, BasisChoice choice);
/// epsilon when the datum has an epsilon view that is usable on this path, datum otherwise.
BasisChoice default_basis(const RootDatum& d, bool quantized);

/// The point set P_D: one coordinate vector (<H_a, lambda>)_a per lambda in D.
struct PointSet {
  HBasis basis;
  bool quantized = true;
  std::vector<Weight> weights;
  std::vector<std::vector<Rational>> coords;

  std::size_t size() const { return weights.size(); }
  std::size_t nvars() const { return basis.size(); }
  std::optional<std::size_t> index_of(const Weight& w) const;
  /// Integral coordinates of point k; throws std::domain_error if half-integral.
  IntVector exponents(std::size_t k) const;
  /// 1 when every coordinate is integral, else the least common denominator.
  long scale() const;
  /// <h, lambda_k> for h given in H-coordinates.
  Rational pairing(const IntVector& h, std::size_t k) const;
};

/// Throws std::domain_error on the quantized path unless the basis is a Z-basis of Y.
PointSet point_set(const RootDatum& d, const WeightSet& D, const HBasis& basis, bool quantized);

/// <h, lambda> over the points, ascending; distinct values only when `reduced`.
std::vector<Rational> pairing_values(const PointSet& P, const IntVector& h, bool reduced);

/// K_h = prod K_a^{h_a}, Laurent monomial.
KPolynomial k_monomial(const IntVector& h);
/// F_h = prod (K_h - v^{<h,lambda>})
KPolynomial generator_F(const PointSet& P, const IntVector& h, bool reduced);
/// G_h = prod (K_{h+} - v^{<h,lambda>} K_{-h-}), a true polynomial.
KPolynomial generator_G(const PointSet& P, const IntVector& h, bool reduced);
/// prod (h - <h,lambda>) with h = sum h_a H_a.
HPolynomial classical_generator(const PointSet& P, const IntVector& h, bool reduced);
/// Factor-by-factor rendering, e.g. "(K1 - 1)*(K1 - v)", "K1*K2 - v^2", "H1*(H1 - 1)".
std::string factored_F(const PointSet& P, const IntVector& h, bool reduced);
std::string factored_G(const PointSet& P, const IntVector& h, bool reduced);
std::string factored_classical(const PointSet& P, const IntVector& h, bool reduced);

VLaurent evaluate(const KPolynomial& p, const IntVector& exps);
Rational evaluate(const HPolynomial& p, const std::vector<Rational>& point);

using ValueVector = std::vector<VLaurent>;
ValueVector evaluation_hom(const PointSet& P, const KPolynomial& p);

/// 1_lambda kept in product form: scalar * prod_a prod_r (K_a - v^r) / denominator.
struct Idempotent {
  Weight lambda;
  std::vector<std::vector<std::int64_t>> roots;
  VLaurent scalar = 1;
  VLaurent denominator = 1;

  /// Exact value at a point; throws std::domain_error when the quotient is not a Laurent polynomial.
  VLaurent evaluate(const IntVector& exps) const;
  /// scalar * prod_a prod_r (K_a - v^r)
  KPolynomial numerator() const;
};

/// 1_lambda = (prod_a J_a^lambda) / c with J_a^lambda = prod over lambda'' in the point set with lambda''_a != lambda_a.
Idempotent idempotent(const PointSet& P, const Weight& lambda);

/// Classical counterpart at v = 1.
struct ClassicalIdempotent {
  Weight lambda;
  std::vector<std::vector<Rational>> roots;
  Rational denominator = 1;

  Rational evaluate(const std::vector<Rational>& point) const;
  HPolynomial numerator() const;
};
ClassicalIdempotent classical_idempotent(const PointSet& P, const Weight& lambda);

/// (<H_a, alpha_j>)_a; integral on the quantized path.
IntVector root_exponents(const RootDatum& d, const HBasis& basis, std::size_t j);
/// K_a -> v^{sign <H_a, alpha_j>} K_a. Evaluating the result at p_mu equals evaluating p at p_{mu + sign alpha_j}.
KPolynomial shift_substitute(const KPolynomial& p, const IntVector& alpha_exps, int sign);
Idempotent shift_substitute(const Idempotent& e, const IntVector& alpha_exps, int sign);

/// D = W pi + {omega +- alpha_j}
WeightSet enlarged_set(const RootDatum& d, const WeightSet& w_pi);

struct CheckReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

bool all_passed(const std::vector<CheckReport>& reports);

/// H_a, -H_a, sum H_a, H_a - H_b (a < b).
std::vector<IntVector> default_family(std::size_t n);
/// The families of the classical examples where one is known for this datum and basis, else default_family.
std::vector<IntVector> preset_family(const RootDatum& d, BasisChoice basis, const std::string& module);
/// Everything with coordinates in {-1,0,1} (minus 0) together with `extra`, deduplicated and sorted.
std::vector<IntVector> verification_family(std::size_t n, const std::vector<IntVector>& extra);

CheckReport verify_vanishing(const PointSet& P, const std::vector<IntVector>& family);
/// K_{h-}^N G_h = F_h with N the number of factors, and G_h has no negative exponents.
CheckReport verify_G_identity(const PointSet& P, const std::vector<IntVector>& family);
/// Deltas, partition of unity, orthogonality.
CheckReport verify_idempotents(const PointSet& P);
/// Classical counterpart: deltas and partition of unity at the classical points.
CheckReport verify_classical_idempotents(const PointSet& P);
/// K_h K_h' = K_{h+h'}, K_h = sum v^{<h,lambda>} 1_lambda, and the commutator identity for each i.
std::vector<CheckReport> verify_zero_part_identities(const RootDatum& d, const PointSet& P,
                                                     const std::vector<IntVector>& family);
/// Shifted idempotents over the enlarged set, for both signs and every lambda in W pi.
CheckReport verify_shift_lemma(const RootDatum& d, const PointSet& P, std::size_t j);
/// On the enlarged set, F_h / (v - 1)^N at v = 1 equals the classical generator.
CheckReport verify_classical_specialization(const RootDatum& d, const PointSet& P, const std::vector<IntVector>& family);

struct ZeroSetReport {
  long radius = 0;
  std::size_t box_points = 0;
  WeightSet zero_set;
  WeightSet expected;
  std::vector<IntVector> family;
  /// Extra separating h found by search.
  std::vector<IntVector> generic;
  bool match() const { return zero_set == expected; }
};

/// Brute force over the box |lambda_a| <= radius in X-coordinates; radius 0 means 2 * max |coordinate|.
ZeroSetReport verify_zero_set(const RootDatum& d, const PointSet& P, long radius = 0);

struct JacobianReport {
  Weight lambda;
  IntMatrix c;
  Integer det_c;
  VLaurent det_jacobian;
  VLaurent expected;
  bool separating = false;
  bool ok() const { return separating && det_c == 1 && det_jacobian == expected && !det_jacobian.is_zero(); }
};

JacobianReport jacobian_spot_check(const PointSet& P, const Weight& lambda);

struct IdealGenerator {
  IntVector h;
  /// F_h (Laurent) on the quantized path, the classical generator otherwise.
  std::string factored;
  KPolynomial k_poly;
  HPolynomial h_poly;
  /// G_h, quantized path only.
  std::string factored_polynomial;
  KPolynomial g_poly;
};

struct PresentationReport {
  std::string datum;
  bool quantized = true;
  BasisChoice basis = BasisChoice::datum;
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  std::vector<IdealGenerator> ideal;
};

/// Standard relations plus the extra generators for the family; throws std::logic_error if one fails to vanish.
PresentationReport presentation(const RootDatum& d, const PointSet& P, const std::vector<IntVector>& family,
                                bool reduced);

}  // namespace schur
