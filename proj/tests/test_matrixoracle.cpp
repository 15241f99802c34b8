#include <doctest.h>

#include "schur/matrixoracle.hpp"

using namespace schur;

namespace {

QMatrix bracket(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

HPolynomial h_var(std::size_t n, std::size_t i) { return HPolynomial::variable(n, i); }

}  // namespace

TEST_CASE("Gelfand-Tsetlin patterns") {
  CHECK(gt_patterns(Weight{1, 0}).size() == 2);
  CHECK(gt_patterns(Weight{2, 1, 0}).size() == 8);
  CHECK(gt_patterns(Weight{1, 0, -1}).size() == 8);
  CHECK(gt_patterns(Weight{3, 1, -2}).size() == 42);
  CHECK(gt_patterns(Weight{1, 1}).size() == 1);
}

TEST_CASE("gl2 blocks satisfy the sl2 relations") {
  const RootDatum d = preset::gl(2);
  for (const Weight& lam : {Weight{1, 0}, Weight{2, 0}, Weight{3, -1}, Weight{1, 1}}) {
    CAPTURE(lam);
    const RepBlock b = build_block(d, lam);
    CHECK(b.dim() == static_cast<std::size_t>(lam[0] - lam[1] + 1));
    const QMatrix h = b.H[0] - b.H[1];
    CHECK(bracket(b.e[0], b.f[0]) == h);
    CHECK(bracket(h, b.e[0]) == b.e[0].scaled(2));
    CHECK(bracket(h, b.f[0]) == b.f[0].scaled(-2));
    CHECK(b.H[0] + b.H[1] == QMatrix::identity(b.dim()).scaled(lam[0] + lam[1]));
  }
  const RepBlock one = build_block(d, Weight{1, 1});
  CHECK(one.e[0].is_zero());
  CHECK(one.f[0].is_zero());
}

TEST_CASE("gl3 block weights agree with the character") {
  const RootDatum d = preset::gl(3);
  for (const Weight& lam : {Weight{2, 1, 0}, Weight{1, 0, -1}, Weight{2, 0, 0}}) {
    const RepBlock b = build_block(d, lam);
    CharacterTable got;
    for (const Weight& w : b.weights) got[w] += 1;
    CHECK(got == freudenthal(d, lam));
    for (std::size_t i = 0; i < 2; ++i) {
      const QMatrix hi = b.H[i] - b.H[i + 1];
      CHECK(bracket(b.e[i], b.f[i]) == hi);
      CHECK(bracket(b.e[i], b.f[1 - i]).is_zero());
    }
    CHECK(b.e[0] * b.e[0] * b.e[1] - b.e[0] * b.e[1] * b.e[0].scaled(2) + b.e[1] * b.e[0] * b.e[0] == QMatrix(b.dim(), b.dim()));
  }
}

TEST_CASE("block construction errors") {
  CHECK_THROWS_AS(build_block(preset::sp(2), Weight{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_block(preset::gl(2), Weight{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum({}), std::invalid_argument);
}

TEST_CASE("direct sums") {
  const RootDatum d = preset::gl(2);
  const RepBlock m = direct_sum({build_block(d, Weight{1, 0}), build_block(d, Weight{1, 0})});
  CHECK(m.dim() == 4);
  CHECK(m.components.size() == 2);
  CHECK(model_for(d, {Weight{2, 0}, Weight{1, 1}}).dim() == 4);
}

TEST_CASE("closure dimensions") {
  const RootDatum d = preset::gl(2);
  CHECK(closure_dimension(model_for(d, {Weight{0, 0}})) == 1);
  CHECK(closure_dimension(model_for(d, {Weight{1, 0}})) == 4);
  CHECK(closure_dimension(model_for(d, {Weight{2, 0}, Weight{1, 1}})) == 10);
  CHECK_THROWS_AS(closure_dimension(model_for(d, {Weight{2, 0}, Weight{1, 1}}), 5), std::length_error);
}

TEST_CASE("presentation holds on the model") {
  const RootDatum d = preset::gl(2);
  const WeightSet pi = tensor_power_pi(d, Weight{1, 0}, 2);
  const RepBlock m = model_for(d, pi);
  const CheckReport rep = check_presentation(d, m, pi);
  CHECK(rep.passed());
  CHECK(rep.checks > 0);
}

TEST_CASE("ideal generators vanish on the model") {
  const RootDatum d = preset::gl(2);
  const WeightSet pi = tensor_power_pi(d, Weight{1, 0}, 2);
  const RepBlock m = model_for(d, pi);
  const HPolynomial sum = h_var(2, 0) + h_var(2, 1) - HPolynomial::constant(2, 2);
  const HPolynomial h1 = h_var(2, 0) * (h_var(2, 0) - HPolynomial::constant(2, 1)) * (h_var(2, 0) - HPolynomial::constant(2, 2));
  CHECK(check_ideal_vanishing(m, {sum, h1}).passed());
  CHECK(evaluate_at(HPolynomial(2), m.H).is_zero());
  // an extra block with weights outside W pi breaks the relations
  const RepBlock bad = direct_sum({m, build_block(d, Weight{1, 0})});
  CHECK_FALSE(check_ideal_vanishing(bad, {sum}).passed());
  CHECK_FALSE(check_presentation(d, bad, pi).passed());
}

TEST_CASE("evaluation at matrices") {
  const RootDatum d = preset::gl(2);
  const RepBlock b = build_block(d, Weight{1, 0});
  const HPolynomial p = h_var(2, 0) * h_var(2, 1);
  CHECK(evaluate_at(p, b.H).is_zero());
  CHECK(evaluate_at(HPolynomial::constant(2, 3), b.H) == QMatrix::identity(2).scaled(3));
}

TEST_CASE("closure cap from the environment") { CHECK(max_closure_dim() >= 1); }
