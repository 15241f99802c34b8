#include <doctest.h>

#include "schur/spinb.hpp"

using namespace schur;

TEST_CASE("omega norms") {
  const RootDatum b2 = preset::so_odd(2);
  CHECK(omega_norm(b2, Weight{0, 0}) == 0);
  CHECK(omega_norm(b2, Weight{1, 0}) == 1);
  CHECK(omega_norm(b2, Weight{0, 2}) == 1);
  CHECK(omega_norm(b2, Weight{0, 1}) == 0);
  CHECK(omega_coords(b2, Weight{0, 1}).shifted);
  CHECK_FALSE(omega_coords(b2, Weight{1, 2}).shifted);
  CHECK(omega_coords(b2, Weight{2, 3}).t == IntVector{2, 1});
  CHECK_THROWS_AS(omega_norm(preset::sp(2), Weight{1, 0}), std::invalid_argument);
}

TEST_CASE("norm does not grow along simple roots") {
  for (int n = 2; n <= 3; ++n) {
    const RootDatum d = preset::so_odd(n);
    const std::size_t sn = static_cast<std::size_t>(n);
    for (int m = 0; m <= 4; ++m)
      for (const Weight& w : union_W(d, m))
        for (const Weight& x : {w, *spin_shift(d, {w}).begin()})
          for (std::size_t i = 0; i < sn; ++i) {
            CAPTURE(x);
            CHECK(check_lemma_C1(d, x, i));
          }
  }
}

TEST_CASE("W_m sets") {
  const RootDatum b2 = preset::so_odd(2);
  CHECK(sets_W_m(b2, 0) == WeightSet{Weight{0, 0}});
  CHECK(sets_W_m(b2, 1) == WeightSet{Weight{1, 0}, Weight{0, 2}});
  CHECK(sets_W_m(b2, 2).size() == 3);
  CHECK(sets_W_m(preset::so_odd(3), 2).size() == 6);
  CHECK(sets_W_m(b2, -1).empty());
  CHECK(union_W(b2, 2).size() == 6);
  CHECK(spin_shift(b2, {Weight{0, 0}}) == WeightSet{Weight{0, 1}});
}

TEST_CASE("spin tensor powers") {
  const RootDatum b2 = preset::so_odd(2);
  CHECK(expected_spin_highest_weights(b2, 0) == WeightSet{Weight{0, 0}});
  CHECK(expected_spin_highest_weights(b2, 1) == WeightSet{Weight{0, 1}});
  CHECK(spin_tensor_highest_weights(b2, 2) == WeightSet{Weight{0, 0}, Weight{1, 0}, Weight{0, 2}});
  CHECK_THROWS_AS(expected_spin_highest_weights(b2, -1), std::invalid_argument);
  for (int n = 2; n <= 3; ++n) {
    const SpinSquareReport sq = check_spin_square(preset::so_odd(n));
    CHECK(sq.ok());
    CHECK(sq.total == Integer(1) << (2 * n));
  }
  const SpinSaturationReport rep = check_spin_saturation(b2, 4);
  CHECK(rep.ok());
  CHECK(rep.per_r.size() == 5);
}
