#include "schur/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace schur {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

VLaurent::VLaurent(const Rational& c) { add_term(0, c); }

VLaurent VLaurent::monomial(int exponent, const Rational& coeff) {
  VLaurent p;
  p.add_term(exponent, coeff);
  return p;
}

void VLaurent::add_term(int e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool VLaurent::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational VLaurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int VLaurent::min_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

int VLaurent::max_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

VLaurent& VLaurent::operator+=(const VLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

VLaurent& VLaurent::operator-=(const VLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

VLaurent operator*(const VLaurent& a, const VLaurent& b) {
  VLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

VLaurent& VLaurent::operator*=(const VLaurent& o) { return *this = *this * o; }

VLaurent VLaurent::operator-() const {
  VLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

VLaurent VLaurent::pow(unsigned e) const {
  VLaurent result(1);
  VLaurent base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

VLaurent VLaurent::bar() const {
  VLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

VLaurent VLaurent::specialize(int d) const {
  if (d == 0) return VLaurent(eval_at_one());
  VLaurent r;
  for (const auto& [e, c] : terms_) r.add_term(e * d, c);
  return r;
}

Rational VLaurent::eval_at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool VLaurent::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

std::optional<VLaurent> VLaurent::divide_exact(const VLaurent& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (is_zero()) return VLaurent();
  // Shift both to ordinary polynomials with nonzero constant term, then long division.
  const int shift_a = min_degree();
  const int shift_b = divisor.min_degree();
  const int deg_b = divisor.max_degree() - shift_b;
  std::vector<Rational> rem(static_cast<std::size_t>(max_degree() - shift_a + 1));
  for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - shift_a)] = c;
  std::vector<Rational> den(static_cast<std::size_t>(deg_b + 1));
  for (const auto& [e, c] : divisor.terms_) den[static_cast<std::size_t>(e - shift_b)] = c;
  const int deg_a = static_cast<int>(rem.size()) - 1;
  if (deg_a < deg_b) return std::nullopt;
  VLaurent q;
  const Rational lead = den.back();
  for (int k = deg_a - deg_b; k >= 0; --k) {
    Rational f = rem[static_cast<std::size_t>(k + deg_b)] / lead;
    if (f == 0) continue;
    for (int j = 0; j <= deg_b; ++j) rem[static_cast<std::size_t>(k + j)] -= f * den[static_cast<std::size_t>(j)];
    q.add_term(k + shift_a - shift_b, f);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return q;
}

namespace {

std::string term_body(int e, const Rational& c) {
  // c > 0 here
  if (e == 0) return rational_to_string(c);
  std::string v = e == 1 ? "v" : "v^" + std::to_string(e);
  if (c == 1) return v;
  return rational_to_string(c) + "*" + v;
}

std::string render(const std::map<int, Rational>& terms, bool spaced) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool neg = c < 0;
    std::string body = term_body(e, neg ? Rational(-c) : c);
    if (first)
      out += (neg ? "-" : "") + body;
    else if (spaced)
      out += (neg ? " - " : " + ") + body;
    else
      out += (neg ? "-" : "+") + body;
    first = false;
  }
  return out;
}

}  // namespace

std::string VLaurent::to_string() const { return render(terms_, true); }
std::string VLaurent::to_compact_string() const { return render(terms_, false); }

VLaurent VLaurent::parse(std::string_view text) {
  KPolynomial p = parse_kpolynomial(text, 0);
  if (p.is_zero()) return VLaurent();
  return p.terms().begin()->second;
}

VLaurent qint(long a) {
  // v^{a-1} + v^{a-3} + ... + v^{1-a}, negated for a < 0
  VLaurent r;
  const long m = a < 0 ? -a : a;
  for (long k = 0; k < m; ++k) r += VLaurent::monomial(static_cast<int>(m - 1 - 2 * k));
  return a < 0 ? -r : r;
}

VLaurent qfactorial(long a) {
  if (a < 0) throw std::domain_error("quantum factorial of negative integer");
  VLaurent r(1);
  for (long k = 1; k <= a; ++k) r *= qint(k);
  return r;
}

VLaurent qbinom(long a, long t) {
  if (t < 0) throw std::domain_error("Gaussian binomial with negative lower index");
  VLaurent num(1), den(1);
  for (long s = 1; s <= t; ++s) {
    num *= VLaurent::monomial(static_cast<int>(a - s + 1)) - VLaurent::monomial(static_cast<int>(-a + s - 1));
    den *= VLaurent::monomial(static_cast<int>(s)) - VLaurent::monomial(static_cast<int>(-s));
  }
  auto q = num.divide_exact(den);
  if (!q) throw std::logic_error("Gaussian binomial did not divide exactly");
  return *q;
}

VLaurent specialize_i(const VLaurent& p, int d_i) { return p.specialize(d_i); }

Rational eval_at_one(const VLaurent& p) { return p.eval_at_one(); }

std::string to_string(const KPolynomial& p) { return p.to_string("K"); }
std::string to_string(const HPolynomial& p) { return p.to_string("H"); }

namespace {

class KParser {
public:
  KParser(std::string_view text, std::size_t nvars) : nvars_(nvars) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  KPolynomial run() {
    if (s_.empty()) fail("empty input");
    KPolynomial p = sum();
    if (pos_ != s_.size()) fail("trailing characters");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  KPolynomial sum() {
    KPolynomial acc(nvars_);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    for (;;) {
      KPolynomial t = term();
      acc += neg ? -t : t;
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    return acc;
  }

  KPolynomial term() {
    KPolynomial t = factor();
    while (eat('*')) t = t * factor();
    return t;
  }

  long integer(bool allow_sign) {
    bool neg = allow_sign && eat('-');
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  int exponent() {
    if (!eat('^')) return 1;
    return static_cast<int>(integer(true));
  }

  KPolynomial factor() {
    if (eat('(')) {
      KPolynomial inner = sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (eat('v')) return KPolynomial::constant(nvars_, VLaurent::monomial(exponent()));
    if (eat('K')) {
      long idx = integer(false);
      if (idx < 1 || static_cast<std::size_t>(idx) > nvars_) fail("variable index out of range");
      Exponents e(nvars_, 0);
      e[static_cast<std::size_t>(idx - 1)] = exponent();
      return KPolynomial::monomial(e);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      integer(false);
      if (eat('/')) integer(false);
      Rational q(s_.substr(start, pos_ - start));
      q.canonicalize();
      return KPolynomial::constant(nvars_, VLaurent(q));
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::size_t nvars_;
};

}  // namespace

KPolynomial parse_kpolynomial(std::string_view text, std::size_t nvars) { return KParser(text, nvars).run(); }

}  // namespace schur
