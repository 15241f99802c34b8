#pragma once

#include "schur/laurent.hpp"
#include "schur/linalg.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schur {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Element of X, as integer coordinates in the chosen X-basis.
struct Weight {
  IntVector coords;

  Weight() = default;
  explicit Weight(IntVector c) : coords(std::move(c)) {}
  Weight(std::initializer_list<std::int64_t> c) : coords(c) {}
  static Weight zero(std::size_t n) { return Weight(IntVector(n, 0)); }

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a);
  Weight operator-() const;
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

/// Finite-type Cartan datum: the symmetric form (i, j) on Z[I].
class CartanDatum {
public:
  /// Validates the form; throws std::invalid_argument on any violated axiom.
  explicit CartanDatum(IntMatrix form);
  /// Builds the form d_i * a_ij from a Cartan matrix using the minimal symmetrizer.
  static CartanDatum from_cartan_matrix(const IntMatrix& a);

  std::size_t size() const { return form_.size(); }
  const IntMatrix& form() const { return form_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return form_[i][j]; }
  /// (i, i) / 2, in {1, 2, 3}
  int d(std::size_t i) const { return static_cast<int>(form_[i][i] / 2); }
  /// Entries 2 (i, j) / (i, i)
  IntMatrix cartan_matrix() const;

private:
  IntMatrix form_;
};

/// Standard (Bourbaki numbering) Cartan matrix of an irreducible finite type.
IntMatrix cartan_matrix_of_type(char type, int rank);

/// Root datum (X, {alpha_i}, Y, {h_i}) with a chosen X-basis and its dual Y-basis.
class RootDatum {
public:
  RootDatum(std::string name, CartanDatum cartan, std::vector<Weight> simple_roots, IntMatrix simple_coroots);

  const std::string& name() const { return name_; }
  const CartanDatum& cartan() const { return cartan_; }
  /// |I|
  std::size_t num_simple() const { return roots_.size(); }
  /// Rank of X.
  std::size_t rank() const { return rank_; }
  const Weight& alpha(std::size_t i) const { return roots_.at(i); }
  const IntVector& coroot(std::size_t i) const { return coroots_.at(i); }
  const std::vector<Weight>& simple_roots() const { return roots_; }
  const IntMatrix& simple_coroots() const { return coroots_; }
  const IntMatrix& cartan_matrix() const { return a_; }
  const QMatrix& cartan_matrix_inverse() const { return a_inv_; }
  int d(std::size_t i) const { return cartan_.d(i); }

  /// <h, lambda> for h in Y-basis coordinates.
  std::int64_t pairing(const IntVector& h, const Weight& lambda) const;
  /// <h_i, lambda>
  std::int64_t coroot_pairing(std::size_t i, const Weight& lambda) const;
  /// (<h_1, lambda>, ..., <h_m, lambda>)
  IntVector dynkin_labels(const Weight& lambda) const;

  /// Read-only epsilon view for the classical-matrix presets: row i of the
  /// matrix holds <H_i, x_a> over the X-basis vectors x_a, i.e. the
  /// coordinates of H_i in the Y-basis.
  bool has_epsilon() const { return epsilon_.has_value(); }
  const QMatrix& epsilon_matrix() const;
  std::vector<Rational> to_epsilon(const Weight& lambda) const;
  /// Throws std::domain_error when the epsilon vector is not in X.
  Weight from_epsilon(const std::vector<Rational>& eps) const;
  /// True when every H_i has integral Y-coordinates (H_i in Y).
  bool epsilon_in_y() const;

  /// Preset kind tag: "gl", "A".."G", or "explicit".
  const std::string& kind() const { return kind_; }

  RootDatum with_epsilon(QMatrix eps) const;
  RootDatum with_kind(std::string kind) const;

private:
  std::string name_;
  std::string kind_ = "explicit";
  CartanDatum cartan_;
  std::size_t rank_;
  std::vector<Weight> roots_;
  IntMatrix coroots_;
  IntMatrix a_;
  QMatrix a_inv_;
  std::optional<QMatrix> epsilon_;
};

namespace preset {

/// gl(n): X = Y = Z^n, alpha_i = eps_i - eps_{i+1}, h_i = H_i - H_{i+1}.
RootDatum gl(int n);
/// so(2n+1) with the spin weight lattice; X-basis = fundamental weights, Y-basis = simple coroots.
RootDatum so_odd(int n);
/// sp(2n); X-basis = fundamental weights (= Z^n), Y-basis = simple coroots.
RootDatum sp(int n);
/// so(2n), n >= 2, with X = Z^n + ((1/2,...,1/2) + Z^n).
RootDatum so_even(int n);
/// Simply connected datum of type X_n: X-basis = fundamental weights.
RootDatum simply_connected(char type, int n);

}  // namespace preset

/// Builds a datum from a type tag: "gl", "A", "B", "C", "D", or "sc:X_n" / "sc:Xn" (n taken from the tag).
RootDatum make_root_datum(const std::string& type, int n);
/// Loads a datum from JSON text: either {"type", "n"} or explicit
/// {"simple_roots", "simple_coroots", "cartan_form"}.
RootDatum load_root_datum_json(const std::string& text);

}  // namespace schur
