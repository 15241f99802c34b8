#include <doctest.h>

#include "schur/idealgen.hpp"

using namespace schur;

namespace {

struct Case {
  RootDatum d;
  PointSet P;
};

Case make_case(const RootDatum& d, const std::string& module, int r, bool quantized) {
  const WeightSet wpi = w_orbit_union(d, tensor_power_pi(d, module_highest_weight(d, module), r));
  return {d, point_set(d, wpi, make_h_basis(d, default_basis(d, quantized)), quantized)};
}

std::vector<std::string> factored_list(const PointSet& P, const std::vector<IntVector>& hs) {
  std::vector<std::string> out;
  for (const IntVector& h : hs) out.push_back(P.quantized ? factored_F(P, h, true) : factored_classical(P, h, true));
  return out;
}

}  // namespace

TEST_CASE("type A generators") {
  const Case a = make_case(preset::gl(2), "natural", 2, true);
  CHECK(factored_list(a.P, {{1, 1}, {1, 0}, {0, 1}}) ==
        std::vector<std::string>{"K1*K2 - v^2", "(K1 - 1)*(K1 - v)*(K1 - v^2)", "(K2 - 1)*(K2 - v)*(K2 - v^2)"});
  CHECK(to_string(generator_F(a.P, {1, 1}, true)) == "K1*K2 - v^2");
  const Case c = make_case(preset::gl(3), "natural", 1, false);
  CHECK(factored_list(c.P, {{1, 1, 1}, {1, 0, 0}}) == std::vector<std::string>{"H1 + H2 + H3 - 1", "H1*(H1 - 1)"});
  CHECK(to_string(classical_generator(c.P, {0, 1, 0}, true)) == "H2^2 - H2");
}

TEST_CASE("reduced and unreduced generators") {
  const Case a = make_case(preset::gl(2), "natural", 2, true);
  const KPolynomial reduced = generator_F(a.P, {1, 1}, true);
  const KPolynomial full = generator_F(a.P, {1, 1}, false);
  CHECK(full == reduced.pow(3));
  CHECK(pairing_values(a.P, {1, -1}, true) == std::vector<Rational>{-2, 0, 2});
  CHECK(pairing_values(a.P, {1, 1}, false) == std::vector<Rational>{2, 2, 2});
}

TEST_CASE("G form clears denominators") {
  const Case a = make_case(preset::gl(2), "natural", 1, true);
  const IntVector h{1, -1};
  const KPolynomial g = generator_G(a.P, h, true);
  CHECK_FALSE(g.has_negative_exponents());
  // (K1 - v^-1 K2)(K1 - v K2)
  KPolynomial k1 = KPolynomial::variable(2, 0), k2 = KPolynomial::variable(2, 1);
  const KPolynomial want = (k1 - k2.scaled(VLaurent::monomial(-1))) * (k1 - k2.scaled(VLaurent::monomial(1)));
  CHECK(g == want);
  CHECK(generator_F(a.P, h, true) == g * k_monomial({0, -2}));
  CHECK(factored_G(a.P, h, true) == "(K1 - v^-1*K2)*(K1 - v*K2)");
}

TEST_CASE("C2 ideal uses every sign choice") {
  const Case c = make_case(preset::sp(2), "natural", 2, true);
  const PresentationReport rep = presentation(c.d, c.P, preset_family(c.d, c.P.basis.choice, "natural"), true);
  std::vector<std::string> got;
  for (const IdealGenerator& g : rep.ideal) got.push_back(g.factored);
  for (const std::string& want : {"(K1*K2 - v^-2)*(K1*K2 - 1)*(K1*K2 - v^2)",
                                  "(K1*K2^-1 - v^-2)*(K1*K2^-1 - 1)*(K1*K2^-1 - v^2)",
                                  "(K1^-1*K2 - v^-2)*(K1^-1*K2 - 1)*(K1^-1*K2 - v^2)",
                                  "(K1^-1*K2^-1 - v^-2)*(K1^-1*K2^-1 - 1)*(K1^-1*K2^-1 - v^2)"})
    CHECK(std::find(got.begin(), got.end(), want) != got.end());
  CHECK_FALSE(rep.relations.empty());
}

TEST_CASE("B2 spin classical generators") {
  const Case b = make_case(preset::so_odd(2), "spin", 2, false);
  CHECK(factored_classical(b.P, {1, 0}, true) == "(H1 + 1)*H1*(H1 - 1)");
  CHECK(factored_classical(b.P, {0, 1}, true) == "(H2 + 1)*H2*(H2 - 1)");
}

TEST_CASE("half-integral points are rejected on the quantized path") {
  const RootDatum b = preset::so_odd(2);
  const WeightSet wpi = w_orbit_union(b, {Weight{0, 1}});
  CHECK_THROWS_AS(point_set(b, wpi, make_h_basis(b, BasisChoice::epsilon), true), std::domain_error);
  CHECK_NOTHROW(point_set(b, wpi, make_h_basis(b, BasisChoice::epsilon), false));
  CHECK_NOTHROW(point_set(b, wpi, make_h_basis(b, BasisChoice::coroot), true));
  CHECK(parse_basis_choice("coroot") == BasisChoice::coroot);
  CHECK_FALSE(parse_basis_choice("bogus").has_value());
}

TEST_CASE("generators vanish on the point set") {
  for (const Case& c : {make_case(preset::gl(2), "natural", 2, true), make_case(preset::gl(3), "natural", 2, true),
                        make_case(preset::sp(2), "natural", 2, true), make_case(preset::so_odd(2), "spin", 2, true)}) {
    CAPTURE(c.d.name());
    for (const IntVector& h : default_family(c.P.nvars())) {
      const KPolynomial f = generator_F(c.P, h, true);
      for (std::size_t k = 0; k < c.P.size(); ++k) CHECK(evaluate(f, c.P.exponents(k)).is_zero());
    }
    CHECK(verify_vanishing(c.P, default_family(c.P.nvars())).passed());
    CHECK(verify_G_identity(c.P, default_family(c.P.nvars())).passed());
  }
}

TEST_CASE("default family") {
  const auto f = default_family(2);
  CHECK(f.size() == 6);
  CHECK(std::find(f.begin(), f.end(), IntVector{1, 1}) != f.end());
  CHECK(std::find(f.begin(), f.end(), IntVector{1, -1}) != f.end());
  CHECK(verification_family(2, {{2, 1}}).size() == 9);
}

TEST_CASE("idempotents are Lagrange interpolants") {
  const Case c = make_case(preset::gl(3), "natural", 2, true);
  for (const Weight& lam : c.P.weights) {
    const Idempotent e = idempotent(c.P, lam);
    for (std::size_t k = 0; k < c.P.size(); ++k)
      CHECK(e.evaluate(c.P.exponents(k)) == VLaurent(c.P.weights[k] == lam ? 1 : 0));
  }
  const Case g = make_case(preset::gl(2), "natural", 2, true);
  for (const Weight& lam : g.P.weights) {
    const Idempotent e = idempotent(g.P, lam);
    for (std::size_t k = 0; k < g.P.size(); ++k) {
      const VLaurent n = evaluate(e.numerator(), g.P.exponents(k));
      CHECK(n == e.evaluate(g.P.exponents(k)) * e.denominator);
    }
  }
  CHECK(verify_idempotents(c.P).passed());
  const Case cl = make_case(preset::sp(2), "natural", 2, false);
  CHECK(verify_classical_idempotents(cl.P).passed());
  for (const Weight& lam : cl.P.weights) {
    const ClassicalIdempotent e = classical_idempotent(cl.P, lam);
    for (std::size_t k = 0; k < cl.P.size(); ++k) CHECK(e.evaluate(cl.P.coords[k]) == (cl.P.weights[k] == lam ? 1 : 0));
  }
}

TEST_CASE("zero part, shift and specialization checks") {
  for (const Case& c : {make_case(preset::gl(2), "natural", 2, true), make_case(preset::sp(2), "natural", 2, true),
                        make_case(preset::so_odd(2), "spin", 2, true)}) {
    CAPTURE(c.d.name());
    const auto fam = default_family(c.P.nvars());
    CHECK(all_passed(verify_zero_part_identities(c.d, c.P, fam)));
    for (std::size_t j = 0; j < c.d.num_simple(); ++j) CHECK(verify_shift_lemma(c.d, c.P, j).passed());
    CHECK(verify_classical_specialization(c.d, c.P, fam).passed());
  }
}

TEST_CASE("enlarged set") {
  const RootDatum d = preset::gl(2);
  const WeightSet wpi{Weight{1, 0}, Weight{0, 1}};
  const WeightSet big = enlarged_set(d, wpi);
  for (const Weight& w : wpi) CHECK(big.count(w) == 1);
  CHECK(big == WeightSet{Weight{1, 0}, Weight{0, 1}, Weight{2, -1}, Weight{-1, 2}});
}

TEST_CASE("zero set and Jacobian") {
  const Case a = make_case(preset::gl(2), "natural", 2, true);
  const ZeroSetReport z = verify_zero_set(a.d, a.P, 3);
  CHECK(z.match());
  CHECK(z.box_points == 49);
  for (const Weight& lam : a.P.weights) CHECK(jacobian_spot_check(a.P, lam).ok());
}

TEST_CASE("shift substitution") {
  const Case a = make_case(preset::gl(2), "natural", 1, true);
  const IntVector alpha = root_exponents(a.d, a.P.basis, 0);
  CHECK(alpha == IntVector{1, -1});
  const KPolynomial k1 = KPolynomial::variable(2, 0);
  CHECK(shift_substitute(k1, alpha, 1) == k1.scaled(VLaurent::monomial(1)));
  CHECK(shift_substitute(k1, alpha, -1) == k1.scaled(VLaurent::monomial(-1)));
}
