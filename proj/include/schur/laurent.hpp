#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schur {

using Rational = mpq_class;
using Integer = mpz_class;

std::string rational_to_string(const Rational& q);

/// Laurent polynomial in v with rational coefficients. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
class VLaurent {
public:
  VLaurent() = default;
  VLaurent(long c) : VLaurent(Rational(c)) {}  // NOLINT: integer literals are scalars
  VLaurent(const Rational& c);                  // NOLINT

  static VLaurent monomial(int exponent, const Rational& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int exponent) const;
  int min_degree() const;
  int max_degree() const;

  VLaurent& operator+=(const VLaurent& o);
  VLaurent& operator-=(const VLaurent& o);
  VLaurent& operator*=(const VLaurent& o);
  VLaurent operator-() const;
  friend VLaurent operator+(VLaurent a, const VLaurent& b) { return a += b; }
  friend VLaurent operator-(VLaurent a, const VLaurent& b) { return a -= b; }
  friend VLaurent operator*(const VLaurent& a, const VLaurent& b);
  friend bool operator==(const VLaurent& a, const VLaurent& b) { return a.terms_ == b.terms_; }

  VLaurent pow(unsigned e) const;
  /// v -> v^-1
  VLaurent bar() const;
  /// v -> v^d
  VLaurent specialize(int d) const;
  Rational eval_at_one() const;
  /// Quotient when `divisor` divides exactly in Q[v, v^-1], nullopt otherwise.
  std::optional<VLaurent> divide_exact(const VLaurent& divisor) const;
  bool has_integer_coefficients() const;

  /// "v^-2 + 1 + v^2": ascending exponents, spaced operators.
  std::string to_string() const;
  /// "v^-2+1+v^2": same order, no spaces (used inside K-polynomial terms).
  std::string to_compact_string() const;
  /// Single-term rendering usable as a product factor, e.g. "3*v^2", "-v", "1/2".
  bool is_single_term() const { return terms_.size() == 1; }

  static VLaurent parse(std::string_view text);

private:
  void add_term(int e, const Rational& c);
  std::map<int, Rational> terms_;
};

/// [a] = (v^a - v^-a) / (v - v^-1)
VLaurent qint(long a);
/// [a]! = [1][2]...[a]
VLaurent qfactorial(long a);
/// Gaussian binomial, computed by exact division of the defining product.
VLaurent qbinom(long a, long t);
/// Replace v by v^{d_i}.
VLaurent specialize_i(const VLaurent& p, int d_i);
Rational eval_at_one(const VLaurent& p);

namespace detail {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<VLaurent> {
  static bool is_zero(const VLaurent& c) { return c.is_zero(); }
  static bool is_one(const VLaurent& c) { return c == VLaurent(1); }
  static bool single(const VLaurent& c) { return c.is_single_term(); }
  static bool leading_negative(const VLaurent& c) { return !c.is_zero() && c.terms().begin()->second < 0; }
  static std::string render(const VLaurent& c) { return c.to_compact_string(); }
};

template <>
struct CoeffTraits<Rational> {
  static bool is_zero(const Rational& c) { return c == 0; }
  static bool is_one(const Rational& c) { return c == 1; }
  static bool single(const Rational&) { return true; }
  static bool leading_negative(const Rational& c) { return c < 0; }
  static std::string render(const Rational& c) { return rational_to_string(c); }
};

}  // namespace detail

using Exponents = std::vector<int>;

/// Sparse multivariate (Laurent) polynomial in n commuting variables with
/// coefficients in C. Zero terms are never stored.
template <class C>
class SparsePoly {
public:
  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const C& c) {
    SparsePoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static SparsePoly monomial(const Exponents& e, const C& c = C(1)) {
    SparsePoly p(e.size());
    p.add_term(e, c);
    return p;
  }
  /// The i-th variable (0-based).
  static SparsePoly variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(e);
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Exponents, C>& terms() const { return terms_; }

  bool has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return true;
    return false;
  }

  void add_term(const Exponents& e, const C& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
    if (detail::CoeffTraits<C>::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (detail::CoeffTraits<C>::is_zero(it->second)) terms_.erase(it);
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    adopt_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    adopt_nvars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly operator-() const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r(std::max(a.nvars_, b.nvars_));
    if (a.nvars_ != b.nvars_ && !a.is_zero() && !b.is_zero())
      throw std::invalid_argument("variable count mismatch");
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly scaled(const C& s) const {
    SparsePoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  SparsePoly pow(unsigned k) const {
    SparsePoly r = constant(nvars_, C(1));
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Terms in descending lexicographic exponent order, e.g. "K1*K2 - v^2".
  std::string to_string(std::string_view var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      C c = it->second;
      bool neg = detail::CoeffTraits<C>::leading_negative(c);
      if (neg) c = -c;
      std::string body = render_term(it->first, c, var);
      if (first)
        out += neg ? "-" + body : body;
      else
        out += neg ? " - " + body : " + " + body;
      first = false;
    }
    return out;
  }

  static std::string monomial_string(const Exponents& e, std::string_view var) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!s.empty()) s += '*';
      s += std::string(var) + std::to_string(k + 1);
      if (e[k] != 1) s += "^" + std::to_string(e[k]);
    }
    return s;
  }

private:
  void adopt_nvars(const SparsePoly& o) {
    if (is_zero() && nvars_ == 0) nvars_ = o.nvars_;
    if (o.nvars_ != nvars_ && !o.is_zero()) throw std::invalid_argument("variable count mismatch");
  }

  static std::string render_term(const Exponents& e, const C& c, std::string_view var) {
    using T = detail::CoeffTraits<C>;
    std::string mono = monomial_string(e, var);
    std::string coeff = T::render(c);
    if (!T::single(c)) coeff = "(" + coeff + ")";
    if (mono.empty()) return coeff;
    if (T::is_one(c)) return mono;
    return coeff + "*" + mono;
  }

  std::size_t nvars_ = 0;
  std::map<Exponents, C> terms_;
};

/// Laurent polynomial in K_1..K_n over Q[v, v^-1]; the zero part U^0.
using KPolynomial = SparsePoly<VLaurent>;
/// Classical polynomial in H_1..H_n over Q; the zero part at v = 1.
using HPolynomial = SparsePoly<Rational>;

std::string to_string(const KPolynomial& p);
std::string to_string(const HPolynomial& p);
/// Parses the rendering grammar of KPolynomial::to_string with `nvars` variables.
KPolynomial parse_kpolynomial(std::string_view text, std::size_t nvars);

}  // namespace schur
