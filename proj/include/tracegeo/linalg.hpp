#pragma once

#include <cstddef>
#include <vector>

#include "tracegeo/rational.hpp"

namespace tracegeo {

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Rational> row(std::size_t r) const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

// Rank of a set of integer vectors (all of the same length).
std::size_t rank(const std::vector<std::vector<int>>& vectors);

Rational determinant(QMatrix m);

// Throws DomainError if m is singular.
QMatrix inverse(const QMatrix& m);

// Basis of {x : m x = 0}, one vector per row of the result.
QMatrix kernel_basis(const QMatrix& m);

// Coefficients of det(x I - m), lowest degree first (monic, degree n).
// Reduction to upper Hessenberg form followed by the Hessenberg recurrence.
std::vector<Rational> characteristic_polynomial(const QMatrix& m);

}  // namespace tracegeo
