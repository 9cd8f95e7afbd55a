#include "tracegeo/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "tracegeo/error.hpp"

namespace tracegeo {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rational QPolynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational QPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPolynomial QPolynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return QPolynomial(std::move(d));
}

QPolynomial QPolynomial::monic() const {
  if (c_.empty()) return {};
  std::vector<Rational> m = c_;
  const Rational lc = c_.back();
  for (auto& x : m) x /= lc;
  return QPolynomial(std::move(m));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  return QPolynomial(std::move(p));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
  return QPolynomial(std::move(d));
}

void divmod(const QPolynomial& a, const QPolynomial& b, QPolynomial& q, QPolynomial& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> quot(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / b.c_.back();
    if (f == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  q = QPolynomial(std::move(quot));
  r = QPolynomial(std::move(rem));
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPolynomial divide_linear(const QPolynomial& p, const Rational& root, Rational& remainder) {
  const auto& c = p.coefficients();
  if (c.empty()) {
    remainder = 0;
    return {};
  }
  std::vector<Rational> q(c.size() - 1);
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * root + c[i];
    if (i > 0) q[i - 1] = acc;
  }
  remainder = acc;
  return QPolynomial(std::move(q));
}

int root_multiplicity(const QPolynomial& p, const Rational& root) {
  if (p.is_zero()) throw DomainError("root multiplicity in the zero polynomial");
  int m = 0;
  QPolynomial cur = p;
  for (;;) {
    Rational rem;
    QPolynomial q = divide_linear(cur, root, rem);
    if (rem != 0) return m;
    cur = std::move(q);
    ++m;
  }
}

}  // namespace tracegeo
