#include "schur/rootdata.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace schur {

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& x : a.coords) x *= k;
  return a;
}

Weight Weight::operator-() const { return -1 * *this; }

std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

CartanDatum::CartanDatum(IntMatrix form) : form_(std::move(form)) {
  const std::size_t m = form_.size();
  if (m == 0) throw std::invalid_argument("Cartan datum needs a nonempty index set");
  QMatrix q(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (form_[i].size() != m) throw std::invalid_argument("Cartan form is not square");
    const std::int64_t ii = form_[i][i];
    if (ii != 2 && ii != 4 && ii != 6) throw std::invalid_argument("(i,i) must lie in {2,4,6} for finite type");
    for (std::size_t j = 0; j < m; ++j) {
      if (form_[i][j] != form_[j][i]) throw std::invalid_argument("Cartan form is not symmetric");
      q(i, j) = static_cast<long>(form_[i][j]);
      if (i == j) continue;
      if ((2 * form_[i][j]) % ii != 0) throw std::invalid_argument("2(i,j)/(i,i) must be an integer");
      const std::int64_t a = 2 * form_[i][j] / ii;
      if (a > 0 || a < -3) throw std::invalid_argument("2(i,j)/(i,i) must lie in {0,-1,-2,-3}");
    }
  }
  // leading principal minors
  for (std::size_t k = 1; k <= m; ++k) {
    QMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = q(i, j);
    if (determinant(minor) <= 0) throw std::invalid_argument("Cartan form is not positive definite (not finite type)");
  }
}

CartanDatum CartanDatum::from_cartan_matrix(const IntMatrix& a) {
  const std::size_t m = a.size();
  if (m == 0) throw std::invalid_argument("Cartan datum needs a nonempty index set");
  for (const auto& row : a)
    if (row.size() != m) throw std::invalid_argument("Cartan matrix is not square");
  std::vector<Rational> d(m, Rational(0));
  std::vector<int> component(m, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (component[s] >= 0) continue;
    std::queue<std::size_t> q;
    d[s] = 1;
    component[s] = ncomp;
    q.push(s);
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j || a[i][j] == 0) continue;
        if (a[j][i] == 0) throw std::invalid_argument("Cartan matrix is not symmetrizable");
        Rational dj = d[i] * static_cast<long>(a[i][j]) / static_cast<long>(a[j][i]);
        if (component[j] < 0) {
          d[j] = dj;
          component[j] = ncomp;
          q.push(j);
        } else if (d[j] != dj) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
    ++ncomp;
  }
  // scale each component to the smallest positive integer vector
  for (int c = 0; c < ncomp; ++c) {
    Integer l = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (component[i] == c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[i].get_den_mpz_t());
    Integer g = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (component[i] == c) {
        d[i] *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d[i].get_num_mpz_t());
      }
    for (std::size_t i = 0; i < m; ++i)
      if (component[i] == c) d[i] /= g;
  }
  IntMatrix form(m, IntVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < m; ++j) form[i][j] = d[i].get_num().get_si() * a[i][j];
  }
  return CartanDatum(std::move(form));
}

IntMatrix CartanDatum::cartan_matrix() const {
  const std::size_t m = size();
  IntMatrix a(m, IntVector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = 2 * form_[i][j] / form_[i][i];
  return a;
}

IntMatrix cartan_matrix_of_type(char type, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  const auto un = static_cast<std::size_t>(n);
  IntMatrix a(un, IntVector(un, 0));
  for (std::size_t i = 0; i < un; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple link
    a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -1;
    a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
  };
  auto set = [&](int i, int j, std::int64_t v) { a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v; };
  switch (type) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) {
        break;  // B1 = A1
      }
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      set(n - 1, n, -1);
      set(n, n - 1, -2);
      break;
    case 'C':
      if (n < 2) break;
      for (int i = 1; i + 1 < n; ++i) link(i, i + 1);
      set(n - 1, n, -2);
      set(n, n - 1, -1);
      break;
    case 'D':
      if (n < 2) throw std::invalid_argument("type D needs rank >= 2");
      for (int i = 1; i + 2 < n; ++i) link(i, i + 1);
      if (n >= 3) {
        link(n - 2, n - 1);
        link(n - 2, n);
      }
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("type F needs rank 4");
      link(1, 2);
      set(2, 3, -1);
      set(3, 2, -2);
      link(3, 4);
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("type G needs rank 2");
      set(1, 2, -1);
      set(2, 1, -3);
      break;
    default:
      throw std::invalid_argument(std::string("unsupported Cartan type '") + type + "'");
  }
  return a;
}

RootDatum::RootDatum(std::string name, CartanDatum cartan, std::vector<Weight> simple_roots, IntMatrix simple_coroots)
    : name_(std::move(name)),
      cartan_(std::move(cartan)),
      rank_(simple_roots.empty() ? 0 : simple_roots[0].size()),
      roots_(std::move(simple_roots)),
      coroots_(std::move(simple_coroots)) {
  const std::size_t m = cartan_.size();
  if (roots_.size() != m || coroots_.size() != m)
    throw std::invalid_argument("need one simple root and one simple coroot per node");
  if (rank_ == 0) throw std::invalid_argument("root datum of rank 0");
  for (std::size_t i = 0; i < m; ++i)
    if (roots_[i].size() != rank_ || coroots_[i].size() != rank_)
      throw std::invalid_argument("simple root/coroot length differs from rank");
  a_ = cartan_.cartan_matrix();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (pairing(coroots_[i], roots_[j]) != a_[i][j])
        throw std::invalid_argument("<h_i, alpha_j> disagrees with 2(i,j)/(i,i) at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
  IntMatrix rr, cc;
  for (std::size_t i = 0; i < m; ++i) {
    rr.push_back(roots_[i].coords);
    cc.push_back(coroots_[i]);
  }
  if (schur::rank(QMatrix::from_integers(rr)) != m) throw std::invalid_argument("simple roots are not linearly independent");
  if (schur::rank(QMatrix::from_integers(cc)) != m) throw std::invalid_argument("simple coroots are not linearly independent");
  auto inv = inverse(QMatrix::from_integers(a_));
  if (!inv) throw std::invalid_argument("singular Cartan matrix");
  a_inv_ = *inv;
}

std::int64_t RootDatum::pairing(const IntVector& h, const Weight& lambda) const {
  if (h.size() != rank_ || lambda.size() != rank_) throw std::invalid_argument("pairing: length mismatch");
  std::int64_t s = 0;
  for (std::size_t a = 0; a < rank_; ++a) s += h[a] * lambda[a];
  return s;
}

std::int64_t RootDatum::coroot_pairing(std::size_t i, const Weight& lambda) const { return pairing(coroots_.at(i), lambda); }

IntVector RootDatum::dynkin_labels(const Weight& lambda) const {
  IntVector out(num_simple());
  for (std::size_t i = 0; i < num_simple(); ++i) out[i] = coroot_pairing(i, lambda);
  return out;
}

const QMatrix& RootDatum::epsilon_matrix() const {
  if (!epsilon_) throw std::logic_error("datum " + name_ + " has no epsilon view");
  return *epsilon_;
}

std::vector<Rational> RootDatum::to_epsilon(const Weight& lambda) const {
  const QMatrix& e = epsilon_matrix();
  std::vector<Rational> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t a = 0; a < rank_; ++a) out[i] += e(i, a) * static_cast<long>(lambda[a]);
  return out;
}

Weight RootDatum::from_epsilon(const std::vector<Rational>& eps) const {
  const QMatrix& e = epsilon_matrix();
  if (eps.size() != rank_) throw std::invalid_argument("epsilon vector length mismatch");
  auto inv = inverse(e);
  if (!inv) throw std::logic_error("singular epsilon matrix");
  Weight w = Weight::zero(rank_);
  for (std::size_t a = 0; a < rank_; ++a) {
    Rational s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += (*inv)(a, i) * eps[i];
    if (s.get_den() != 1) throw std::domain_error("epsilon vector does not lie in X");
    w[a] = s.get_num().get_si();
  }
  return w;
}

bool RootDatum::epsilon_in_y() const { return epsilon_matrix().is_integral(); }

RootDatum RootDatum::with_epsilon(QMatrix eps) const {
  if (eps.rows() != rank_ || eps.cols() != rank_ || determinant(eps) == 0)
    throw std::invalid_argument("epsilon matrix must be invertible of size rank x rank");
  RootDatum r = *this;
  r.epsilon_ = std::move(eps);
  return r;
}

RootDatum RootDatum::with_kind(std::string kind) const {
  RootDatum r = *this;
  r.kind_ = std::move(kind);
  return r;
}

namespace preset {

namespace {

// Classical-matrix presets: roots in eps-coordinates, coroots in H-coordinates.
// The X-basis is taken to be the fundamental weights (dual to the coroots).
RootDatum from_classical(std::string name, char kind, const IntMatrix& roots_eps, const IntMatrix& coroots_h) {
  const std::size_t n = roots_eps.size();
  IntMatrix a(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += coroots_h[i][k] * roots_eps[j][k];
      a[i][j] = s;
    }
  // fundamental weights in eps-coordinates: columns of the inverse coroot matrix
  auto w = inverse(QMatrix::from_integers(coroots_h));
  if (!w) throw std::logic_error("coroots do not form a basis");
  std::vector<Weight> alphas;
  IntMatrix coroots;
  for (std::size_t j = 0; j < n; ++j) {
    Weight al = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i) al[i] = a[i][j];
    alphas.push_back(al);
    IntVector h(n, 0);
    h[j] = 1;
    coroots.push_back(h);
  }
  RootDatum d(std::move(name), CartanDatum::from_cartan_matrix(a), std::move(alphas), std::move(coroots));
  return d.with_epsilon(*w).with_kind(std::string(1, kind));
}

IntVector unit(std::size_t n, std::size_t i, std::int64_t s = 1) {
  IntVector v(n, 0);
  v[i] = s;
  return v;
}

IntVector diff(std::size_t n, std::size_t i) {
  IntVector v(n, 0);
  v[i] = 1;
  v[i + 1] = -1;
  return v;
}

}  // namespace

RootDatum gl(int n) {
  if (n < 2) throw std::invalid_argument("gl(n) needs n >= 2 (empty index set otherwise)");
  const auto un = static_cast<std::size_t>(n);
  std::vector<Weight> roots;
  IntMatrix coroots;
  for (std::size_t i = 0; i + 1 < un; ++i) {
    roots.emplace_back(diff(un, i));
    coroots.push_back(diff(un, i));
  }
  RootDatum d("gl(" + std::to_string(n) + ")", CartanDatum::from_cartan_matrix(cartan_matrix_of_type('A', n - 1)),
              std::move(roots), std::move(coroots));
  return d.with_epsilon(QMatrix::identity(un)).with_kind("gl");
}

RootDatum so_odd(int n) {
  if (n < 1) throw std::invalid_argument("so(2n+1) needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  IntMatrix roots, coroots;
  for (std::size_t i = 0; i + 1 < un; ++i) {
    roots.push_back(diff(un, i));
    coroots.push_back(diff(un, i));
  }
  roots.push_back(unit(un, un - 1));        // alpha_n = eps_n
  coroots.push_back(unit(un, un - 1, 2));   // h_n = 2 H_n
  return from_classical("so(" + std::to_string(2 * n + 1) + ")", 'B', roots, coroots);
}

RootDatum sp(int n) {
  if (n < 1) throw std::invalid_argument("sp(2n) needs n >= 1");
  const auto un = static_cast<std::size_t>(n);
  IntMatrix roots, coroots;
  for (std::size_t i = 0; i + 1 < un; ++i) {
    roots.push_back(diff(un, i));
    coroots.push_back(diff(un, i));
  }
  roots.push_back(unit(un, un - 1, 2));  // alpha_n = 2 eps_n
  coroots.push_back(unit(un, un - 1));   // h_n = H_n
  return from_classical("sp(" + std::to_string(2 * n) + ")", 'C', roots, coroots);
}

RootDatum so_even(int n) {
  if (n < 2) throw std::invalid_argument("so(2n) needs n >= 2");
  const auto un = static_cast<std::size_t>(n);
  IntMatrix roots, coroots;
  for (std::size_t i = 0; i + 1 < un; ++i) {
    roots.push_back(diff(un, i));
    coroots.push_back(diff(un, i));
  }
  IntVector last(un, 0);
  last[un - 2] = 1;
  last[un - 1] = 1;
  roots.push_back(last);    // alpha_n = eps_{n-1} + eps_n
  coroots.push_back(last);  // h_n = H_{n-1} + H_n
  return from_classical("so(" + std::to_string(2 * n) + ")", 'D', roots, coroots);
}

RootDatum simply_connected(char type, int n) {
  IntMatrix a = cartan_matrix_of_type(type, n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<Weight> roots;
  IntMatrix coroots;
  for (std::size_t j = 0; j < un; ++j) {
    Weight al = Weight::zero(un);
    for (std::size_t i = 0; i < un; ++i) al[i] = a[i][j];
    roots.push_back(al);
    coroots.push_back(unit(un, j));
  }
  RootDatum d(std::string("sc:") + type + std::to_string(n), CartanDatum::from_cartan_matrix(a), std::move(roots),
              std::move(coroots));
  return d.with_kind(std::string(1, type));
}

}  // namespace preset

RootDatum make_root_datum(const std::string& type, int n) {
  if (type == "gl") return preset::gl(n);
  if (type == "A") return preset::simply_connected('A', n);
  if (type == "B") return preset::so_odd(n);
  if (type == "C") return preset::sp(n);
  if (type == "D") return preset::so_even(n);
  if (type.rfind("sc:", 0) == 0 && type.size() >= 4) {
    const char t = type[3];
    std::string digits = type.substr(4);
    if (!digits.empty() && digits[0] == '_') digits.erase(0, 1);
    int rank = n;
    if (!digits.empty()) {
      if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("malformed type tag '" + type + "'");
      rank = std::stoi(digits);
    }
    return preset::simply_connected(t, rank);
  }
  throw std::invalid_argument("unsupported datum type '" + type + "'");
}

RootDatum load_root_datum_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("datum config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("datum config must be a JSON object");
  try {
    if (j.contains("type") && !j.contains("simple_roots")) {
      const int n = j.value("n", 0);
      return make_root_datum(j.at("type").get<std::string>(), n);
    }
    auto roots_raw = j.at("simple_roots").get<IntMatrix>();
    auto coroots = j.at("simple_coroots").get<IntMatrix>();
    auto form = j.at("cartan_form").get<IntMatrix>();
    std::vector<Weight> roots;
    for (auto& r : roots_raw) roots.emplace_back(std::move(r));
    return RootDatum(j.value("name", std::string("explicit")), CartanDatum(std::move(form)), std::move(roots),
                     std::move(coroots));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("datum config: ") + e.what());
  }
}

}  // namespace schur
