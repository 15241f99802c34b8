#include <doctest.h>

#include "schur/rootdata.hpp"

using namespace schur;

namespace {

// <h_i, alpha_j> straight from root and coroot lists in epsilon / H coordinates
IntMatrix by_hand(const IntMatrix& roots_eps, const IntMatrix& coroots_h) {
  IntMatrix a(roots_eps.size(), IntVector(roots_eps.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t k = 0; k < roots_eps[j].size(); ++k) a[i][j] += coroots_h[i][k] * roots_eps[j][k];
  return a;
}

std::vector<RootDatum> presets() {
  std::vector<RootDatum> v;
  for (int n = 2; n <= 4; ++n) v.push_back(preset::gl(n));
  for (int n = 1; n <= 4; ++n) v.push_back(preset::so_odd(n));
  for (int n = 1; n <= 4; ++n) v.push_back(preset::sp(n));
  for (int n = 2; n <= 4; ++n) v.push_back(preset::so_even(n));
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'E', 6}, {'E', 7},
                                                       {'E', 8}, {'F', 4}, {'G', 2}})
    v.push_back(preset::simply_connected(t, n));
  return v;
}

}  // namespace

TEST_CASE("gl presets") {
  const RootDatum d = preset::gl(2);
  CHECK(d.alpha(0) == Weight{1, -1});
  CHECK(d.coroot(0) == IntVector{1, -1});
  CHECK(d.cartan_matrix() == IntMatrix{{2}});
  CHECK(d.pairing({1, -1}, Weight{2, 0}) == 2);
  CHECK(d.pairing({0, 0}, Weight{5, -3}) == 0);
  CHECK(preset::gl(3).cartan_matrix() == IntMatrix{{2, -1}, {-1, 2}});
}

TEST_CASE("classical presets match the root lists") {
  // sp(4): alpha = eps1 - eps2, 2 eps2; h = H1 - H2, H2
  CHECK(preset::sp(2).cartan_matrix() == by_hand({{1, -1}, {0, 2}}, {{1, -1}, {0, 1}}));
  CHECK(preset::sp(2).cartan_matrix() == IntMatrix{{2, -2}, {-1, 2}});
  // so(5): alpha = eps1 - eps2, eps2; h = H1 - H2, 2 H2
  CHECK(preset::so_odd(2).cartan_matrix() == by_hand({{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}));
  // so(8): alpha_4 = eps3 + eps4, h_4 = H3 + H4
  CHECK(preset::so_even(4).cartan_matrix() ==
        by_hand({{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}},
                {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}}));
}

TEST_CASE("spin datum pairing") {
  const RootDatum d = preset::so_odd(2);
  // h_2 = 2 H_2 paired with varpi_2 = (1/2, 1/2)
  CHECK(d.pairing(d.coroot(1), Weight{0, 1}) == 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Weight w = Weight::zero(2);
      w[j] = 1;
      CHECK(d.coroot_pairing(i, w) == (i == j ? 1 : 0));
    }
  const auto eps = d.to_epsilon(Weight{0, 1});
  CHECK(eps == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(d.from_epsilon({1, 0}) == Weight{1, 0});
  CHECK_FALSE(d.epsilon_in_y());
  CHECK(preset::sp(2).epsilon_in_y());
}

TEST_CASE("every preset is a symmetrizable finite-type datum") {
  for (const RootDatum& d : presets()) {
    CAPTURE(d.name());
    const IntMatrix& a = d.cartan_matrix();
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i][i] == 2);
      CHECK((d.d(i) >= 1 && d.d(i) <= 3));
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(d.d(i) * a[i][j] == d.d(j) * a[j][i]);
        if (i != j) CHECK((a[i][j] <= 0 && a[i][j] >= -3));
      }
    }
    // leading minors of the symmetrized matrix are positive
    const IntMatrix& form = d.cartan().form();
    for (std::size_t k = 1; k <= form.size(); ++k) {
      IntMatrix m(k, IntVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i][j] = form[i][j];
      CHECK(integer_determinant(m) > 0);
    }
  }
}

TEST_CASE("minimal symmetrizer") {
  const RootDatum b2 = preset::so_odd(2);
  CHECK(b2.d(0) == 2);
  CHECK(b2.d(1) == 1);
  const RootDatum g2 = preset::simply_connected('G', 2);
  CHECK(std::min(g2.d(0), g2.d(1)) == 1);
  CHECK(std::max(g2.d(0), g2.d(1)) == 3);
}

TEST_CASE("pairing is bilinear") {
  const RootDatum d = preset::so_even(3);
  const IntVector h{1, 2, -1}, g{0, -3, 2};
  const Weight l{1, -1, 2}, m{3, 0, -2};
  IntVector hg(3);
  for (int a = 0; a < 3; ++a) hg[a] = h[a] + g[a];
  CHECK(d.pairing(hg, l) == d.pairing(h, l) + d.pairing(g, l));
  CHECK(d.pairing(h, l + m) == d.pairing(h, l) + d.pairing(h, m));
}

TEST_CASE("invalid Cartan data are rejected") {
  CHECK_THROWS_AS(CartanDatum(IntMatrix{{3}}), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum({{2, -1}, {-2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum({{2, -3}, {-3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum({{2, -2}, {-2, 2}}), std::invalid_argument);
  CHECK_NOTHROW(CartanDatum({{2, -1}, {-1, 2}}));
  CHECK_THROWS_AS(make_root_datum("Q", 2), std::invalid_argument);
  CHECK_THROWS_AS(preset::so_even(1), std::invalid_argument);
}

TEST_CASE("bad root data are rejected") {
  // <h_1, alpha_1> = 1
  CHECK_THROWS_AS(RootDatum("bad", CartanDatum(IntMatrix{{2}}), {Weight{1}}, {{1}}), std::invalid_argument);
}

TEST_CASE("JSON configs") {
  const RootDatum a = load_root_datum_json(R"({"type": "C", "n": 2})");
  CHECK(a.cartan_matrix() == preset::sp(2).cartan_matrix());
  const RootDatum b = load_root_datum_json(R"({"type": "sc:G_2"})");
  CHECK(b.num_simple() == 2);
  const RootDatum c = load_root_datum_json(
      R"({"simple_roots": [[1, -1]], "simple_coroots": [[1, -1]], "cartan_form": [[2]]})");
  CHECK(c.rank() == 2);
  CHECK(c.num_simple() == 1);
  CHECK_THROWS_AS(load_root_datum_json("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(load_root_datum_json("{"), std::invalid_argument);
}
