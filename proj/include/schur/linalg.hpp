#pragma once

#include "schur/laurent.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace schur {

/// Dense row-major matrix over Q.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Rational>& data() const { return a_; }

  bool is_zero() const;
  bool is_integral() const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  QMatrix scaled(const Rational& s) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

std::size_t rank(QMatrix m);
Rational determinant(QMatrix m);
/// nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);
/// Fraction-free determinant of a square integer matrix.
Integer integer_determinant(const std::vector<std::vector<std::int64_t>>& m);

/// Incrementally maintained reduced row-echelon basis of a subspace of Q^dim.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
  /// Reduces v against the basis; inserts the remainder if nonzero. Returns true if the span grew.
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

private:
  void reduce(std::vector<Rational>& v) const;
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace schur
