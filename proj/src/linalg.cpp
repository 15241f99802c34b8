#include "schur/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace schur {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

bool QMatrix::is_integral() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix r(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (y == 0) continue;
        t = x * y;
        r(i, j) += t;
      }
    }
  return r;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  QMatrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

namespace {

// Gauss-Jordan in place; returns rank and accumulates the determinant sign/scale.
std::size_t eliminate(QMatrix& m, Rational* det, QMatrix* companion) {
  std::size_t row = 0;
  if (det) *det = 1;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) {
      if (det) *det = 0;
      continue;
    }
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j) std::swap((*companion)(piv, j), (*companion)(row, j));
      if (det) *det = -*det;
    }
    Rational p = m(row, col);
    if (det) *det *= p;
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) /= p;
    if (companion)
      for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(row, j) /= p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
      if (companion)
        for (std::size_t j = 0; j < companion->cols(); ++j) (*companion)(i, j) -= f * (*companion)(row, j);
    }
    ++row;
  }
  return row;
}

}  // namespace

std::size_t rank(QMatrix m) { return eliminate(m, nullptr, nullptr); }

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Rational det;
  std::size_t r = eliminate(m, &det, nullptr);
  return r == m.rows() ? det : Rational(0);
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  QMatrix work = m;
  QMatrix inv = QMatrix::identity(m.rows());
  if (eliminate(work, nullptr, &inv) != m.rows()) return std::nullopt;
  return inv;
}

Integer integer_determinant(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("determinant of non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(rows[i][j]);
  }
  // Bareiss
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void EchelonBasis::reduce(std::vector<Rational>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    Rational f = v[p];
    const auto& row = rows_[r];
    for (std::size_t j = p; j < dim_; ++j)
      if (row[j] != 0) v[j] -= f * row[j];
  }
}

bool EchelonBasis::insert(std::vector<Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (it == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - v.begin());
  Rational lead = v[p];
  for (std::size_t j = p; j < dim_; ++j) v[j] /= lead;
  // keep existing rows reduced at the new pivot
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    Rational f = row[p];
    for (std::size_t j = p; j < dim_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(std::vector<Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace schur
