#pragma once

#include <vector>

#include "tracegeo/rational.hpp"

namespace tracegeo {

// Dense univariate polynomial over Q, coefficients lowest degree first,
// always trimmed (no trailing zeros; the zero polynomial is empty).
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  QPolynomial derivative() const;
  QPolynomial monic() const;

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  // Euclidean division; divisor must be nonzero.
  friend void divmod(const QPolynomial& a, const QPolynomial& b, QPolynomial& q,
                     QPolynomial& r);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
QPolynomial gcd(QPolynomial a, QPolynomial b);

// Synthetic division by (x - root): returns the quotient, sets remainder.
QPolynomial divide_linear(const QPolynomial& p, const Rational& root, Rational& remainder);

// Largest m with (x - root)^m | p; p nonzero.
int root_multiplicity(const QPolynomial& p, const Rational& root);

}  // namespace tracegeo
