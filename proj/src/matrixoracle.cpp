#include "schur/matrixoracle.hpp"

#include "schur/characters.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

namespace schur {

namespace {

// Interlacing rows below `top`.
void below(const IntVector& top, std::vector<IntVector>& out) {
  const std::size_t m = top.size() - 1;
  IntVector row(m);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      out.push_back(row);
      return;
    }
    for (std::int64_t x = top[i + 1]; x <= top[i]; ++x) {
      row[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

void extend(Pattern& p, std::vector<Pattern>& out) {
  if (p.back().size() == 1) {
    out.push_back(p);
    return;
  }
  std::vector<IntVector> rows;
  below(p.back(), rows);
  for (auto& r : rows) {
    p.push_back(r);
    extend(p, out);
    p.pop_back();
  }
}

bool valid(const Pattern& p) {
  for (std::size_t r = 1; r < p.size(); ++r)
    for (std::size_t i = 0; i < p[r].size(); ++i)
      if (p[r][i] > p[r - 1][i] || p[r][i] < p[r - 1][i + 1]) return false;
  return true;
}

}  // namespace

std::vector<Pattern> gt_patterns(const Weight& lambda) {
  std::vector<Pattern> out;
  if (lambda.size() == 0) return out;
  Pattern p{lambda.coords};
  extend(p, out);
  return out;
}

std::string to_string(const Pattern& p) {
  std::string s = "[";
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (r) s += "|";
    for (std::size_t i = 0; i < p[r].size(); ++i) s += (i ? "," : "") + std::to_string(p[r][i]);
  }
  return s + "]";
}

RepBlock build_block(const RootDatum& d, const Weight& lambda) {
  if (d.kind() != "gl") throw std::invalid_argument("matrix models exist for the gl data only");
  const std::size_t n = d.rank();
  if (lambda.size() != n) throw std::invalid_argument("weight has the wrong length");
  for (std::size_t a = 0; a + 1 < n; ++a)
    if (lambda[a] < lambda[a + 1]) throw std::invalid_argument(to_string(lambda) + " is not dominant");

  const std::vector<Pattern> basis = gt_patterns(lambda);
  std::map<Pattern, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  const std::size_t N = basis.size();

  // Molev indexing: row k (1..n) has k entries; l_{ki} = lambda_{ki} - i + 1
  auto at = [n](const Pattern& p, std::size_t k, std::size_t i) { return p[n - k][i - 1]; };
  auto l = [&](const Pattern& p, std::size_t k, std::size_t i) {
    return Rational(static_cast<long>(at(p, k, i) - static_cast<std::int64_t>(i) + 1));
  };

  RepBlock b;
  b.components = {lambda};
  for (const Pattern& p : basis) {
    b.labels.push_back(to_string(p));
    Weight w = Weight::zero(n);
    for (std::size_t k = 1; k <= n; ++k) {
      std::int64_t s = 0;
      for (std::size_t i = 1; i <= k; ++i) s += at(p, k, i);
      for (std::size_t i = 1; i + 1 <= k; ++i) s -= at(p, k - 1, i);
      w[k - 1] = s;
    }
    b.weights.push_back(w);
  }
  for (std::size_t a = 0; a < n; ++a) {
    QMatrix h(N, N);
    for (std::size_t c = 0; c < N; ++c) h(c, c) = static_cast<long>(b.weights[c][a]);
    b.H.push_back(h);
  }
  for (std::size_t k = 1; k < n; ++k) {
    QMatrix e(N, N), f(N, N);
    for (std::size_t c = 0; c < N; ++c) {
      const Pattern& p = basis[c];
      for (std::size_t i = 1; i <= k; ++i) {
        Rational den = 1;
        for (std::size_t j = 1; j <= k; ++j)
          if (j != i) den *= l(p, k, i) - l(p, k, j);
        Pattern up = p;
        up[n - k][i - 1] += 1;
        if (valid(up)) {
          Rational num = -1;
          for (std::size_t j = 1; j <= k + 1; ++j) num *= l(p, k, i) - l(p, k + 1, j);
          e(index.at(up), c) += num / den;
        }
        Pattern down = p;
        down[n - k][i - 1] -= 1;
        if (valid(down)) {
          Rational num = 1;
          for (std::size_t j = 1; j + 1 <= k; ++j) num *= l(p, k, i) - l(p, k - 1, j);
          f(index.at(down), c) += num / den;
        }
      }
    }
    b.e.push_back(e);
    b.f.push_back(f);
  }
  return b;
}

namespace {

QMatrix block_diag(const std::vector<const QMatrix*>& parts, std::size_t total) {
  QMatrix m(total, total);
  std::size_t off = 0;
  for (const QMatrix* p : parts) {
    for (std::size_t i = 0; i < p->rows(); ++i)
      for (std::size_t j = 0; j < p->cols(); ++j) m(off + i, off + j) = (*p)(i, j);
    off += p->rows();
  }
  return m;
}

}  // namespace

RepBlock direct_sum(const std::vector<RepBlock>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct sum of no blocks");
  RepBlock out;
  std::size_t total = 0;
  for (const RepBlock& b : blocks) {
    total += b.dim();
    out.components.insert(out.components.end(), b.components.begin(), b.components.end());
    out.labels.insert(out.labels.end(), b.labels.begin(), b.labels.end());
    out.weights.insert(out.weights.end(), b.weights.begin(), b.weights.end());
  }
  auto sum = [&](std::vector<QMatrix> RepBlock::*field) {
    std::vector<QMatrix> r;
    for (std::size_t k = 0; k < (blocks[0].*field).size(); ++k) {
      std::vector<const QMatrix*> parts;
      for (const RepBlock& b : blocks) parts.push_back(&(b.*field)[k]);
      r.push_back(block_diag(parts, total));
    }
    return r;
  };
  out.e = sum(&RepBlock::e);
  out.f = sum(&RepBlock::f);
  out.H = sum(&RepBlock::H);
  return out;
}

RepBlock model_for(const RootDatum& d, const WeightSet& pi) {
  std::vector<RepBlock> blocks;
  for (const Weight& w : pi) blocks.push_back(build_block(d, w));
  return direct_sum(blocks);
}

QMatrix evaluate_at(const HPolynomial& p, const std::vector<QMatrix>& h) {
  if (h.empty()) throw std::invalid_argument("no matrices to evaluate at");
  const std::size_t N = h[0].rows();
  std::vector<std::vector<QMatrix>> powers(h.size());
  auto power = [&](std::size_t a, int k) -> const QMatrix& {
    if (k < 0) throw std::invalid_argument("negative exponent in a matrix evaluation");
    auto& ps = powers[a];
    if (ps.empty()) ps.push_back(QMatrix::identity(N));
    while (static_cast<int>(ps.size()) <= k) ps.push_back(ps.back() * h[a]);
    return ps[k];
  };
  QMatrix out(N, N);
  for (const auto& [e, c] : p.terms()) {
    if (e.size() != h.size()) throw std::invalid_argument("variable count mismatch");
    QMatrix t = QMatrix::identity(N);
    for (std::size_t a = 0; a < e.size(); ++a)
      if (e[a] != 0) t = t * power(a, e[a]);
    out = out + t.scaled(c);
  }
  return out;
}

namespace {

void expect(CheckReport& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) r.failures.push_back(what);
}

QMatrix comm(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix divided_power(const QMatrix& x, std::int64_t s) {
  QMatrix p = QMatrix::identity(x.rows());
  Rational fact = 1;
  for (std::int64_t k = 1; k <= s; ++k) {
    p = p * x;
    fact *= static_cast<long>(k);
  }
  return p.scaled(1 / fact);
}

QMatrix serre(const QMatrix& xi, const QMatrix& xj, std::int64_t aij) {
  const std::int64_t N = 1 - aij;
  QMatrix out(xi.rows(), xi.cols());
  for (std::int64_t s = 0; s <= N; ++s) {
    QMatrix t = divided_power(xi, s) * xj * divided_power(xi, N - s);
    out = (N - s) % 2 ? out - t : out + t;
  }
  return out;
}

}  // namespace

CheckReport check_presentation(const RootDatum& d, const RepBlock& model, const WeightSet& pi) {
  CheckReport r;
  r.name = "presentation";
  const std::size_t N = model.dim();
  const std::size_t m = d.num_simple();
  const WeightSet wpi = w_orbit_union(d, pi);
  const PointSet P = point_set(d, wpi, make_h_basis(d, BasisChoice::epsilon), false);
  const QMatrix I = QMatrix::identity(N);
  const QMatrix Z(N, N);

  std::map<Weight, QMatrix> one;
  for (const Weight& w : P.weights) {
    const ClassicalIdempotent c = classical_idempotent(P, w);
    one[w] = evaluate_at(c.numerator(), model.H).scaled(1 / c.denominator);
  }
  auto one_of = [&](const Weight& w) -> const QMatrix& {
    auto it = one.find(w);
    return it == one.end() ? Z : it->second;
  };

  // (a)
  QMatrix total(N, N);
  for (const auto& [w, p] : one) {
    total = total + p;
    for (const auto& [w2, p2] : one)
      expect(r, p * p2 == (w == w2 ? p : Z), "(a) 1_" + to_string(w) + " 1_" + to_string(w2));
    std::size_t mult = 0;
    for (const Weight& x : model.weights) mult += x == w;
    expect(r, rank(p) == mult, "rank of 1_" + to_string(w));
  }
  expect(r, total == I, "(a) sum of 1_lambda = 1");

  // (b), (c)
  for (std::size_t i = 0; i < m; ++i)
    for (const Weight& w : P.weights) {
      const Weight& a = d.alpha(i);
      const std::string tag = std::to_string(i + 1) + " at " + to_string(w);
      expect(r, model.e[i] * one_of(w) == one_of(w + a) * model.e[i], "(b) e_i 1_lambda, i = " + tag);
      expect(r, one_of(w) * model.e[i] == model.e[i] * one_of(w - a), "(b) 1_lambda e_i, i = " + tag);
      expect(r, model.f[i] * one_of(w) == one_of(w - a) * model.f[i], "(c) f_i 1_lambda, i = " + tag);
      expect(r, one_of(w) * model.f[i] == model.f[i] * one_of(w + a), "(c) 1_lambda f_i, i = " + tag);
    }

  // (d)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      QMatrix rhs(N, N);
      if (i == j)
        for (const auto& [w, p] : one) rhs = rhs + p.scaled(static_cast<long>(d.coroot_pairing(i, w)));
      expect(r, comm(model.e[i], model.f[j]) == rhs,
             "(d) i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1));
    }

  // (e), (f)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const std::int64_t aij = d.cartan_matrix()[i][j];
      const std::string tag = "i = " + std::to_string(i + 1) + ", j = " + std::to_string(j + 1);
      expect(r, serre(model.e[i], model.e[j], aij).is_zero(), "(e) " + tag);
      expect(r, serre(model.f[i], model.f[j], aij).is_zero(), "(f) " + tag);
    }

  // U-relations among e, f, H and H = sum <H_a, lambda> 1_lambda
  for (std::size_t a = 0; a < model.H.size(); ++a) {
    QMatrix rhs(N, N);
    for (const auto& [w, p] : one) rhs = rhs + p.scaled(static_cast<long>(w[a]));
    expect(r, model.H[a] == rhs, "H_" + std::to_string(a + 1) + " = sum <H_a, lambda> 1_lambda");
    for (std::size_t b = 0; b < model.H.size(); ++b)
      expect(r, comm(model.H[a], model.H[b]).is_zero(), "[H_a, H_b] = 0");
    for (std::size_t i = 0; i < m; ++i) {
      const long t = static_cast<long>(d.alpha(i)[a]);
      const std::string tag = "a = " + std::to_string(a + 1) + ", i = " + std::to_string(i + 1);
      expect(r, comm(model.H[a], model.e[i]) == model.e[i].scaled(t), "[H_a, e_i], " + tag);
      expect(r, comm(model.H[a], model.f[i]) == model.f[i].scaled(-t), "[H_a, f_i], " + tag);
    }
  }
  return r;
}

CheckReport check_ideal_vanishing(const RepBlock& model, const std::vector<HPolynomial>& generators) {
  CheckReport r;
  r.name = "ideal vanishing";
  for (const HPolynomial& g : generators)
    expect(r, evaluate_at(g, model.H).is_zero(), to_string(g) + " acts as zero");
  return r;
}

std::size_t max_closure_dim() {
  if (const char* s = std::getenv("SCHUR_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::size_t closure_dimension(const RepBlock& model, std::size_t cap) {
  const std::size_t N = model.dim();
  if (N == 0) return 0;
  std::vector<const QMatrix*> gens;
  for (const auto* v : {&model.e, &model.f, &model.H})
    for (const QMatrix& x : *v) gens.push_back(&x);

  EchelonBasis basis(N * N);
  std::deque<QMatrix> queue;
  auto add = [&](const QMatrix& x) {
    if (basis.insert(x.data())) {
      if (basis.size() > cap) throw std::length_error("closure dimension exceeds " + std::to_string(cap));
      queue.push_back(x);
    }
  };
  add(QMatrix::identity(N));
  while (!queue.empty()) {
    const QMatrix x = std::move(queue.front());
    queue.pop_front();
    for (const QMatrix* g : gens) add(x * *g);
  }
  if (basis.size() > N * N) throw std::logic_error("closure larger than the full matrix algebra");
  return basis.size();
}

}  // namespace schur
