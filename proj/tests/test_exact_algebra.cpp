#include <doctest.h>

#include <random>

#include "tracegeo/arithmetic.hpp"
#include "tracegeo/error.hpp"
#include "tracegeo/linalg.hpp"
#include "tracegeo/polynomial.hpp"
#include "tracegeo/rational.hpp"

using namespace tracegeo;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = q(num(rng), den(rng));
  return m;
}

// det(x I - m) by cofactor-free elimination at a rational point.
Rational charpoly_at(const QMatrix& m, const Rational& x) {
  QMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = (i == j ? x : Rational(0)) - m(i, j);
  return determinant(a);
}

}  // namespace

TEST_CASE("rational text round trip") {
  CHECK(to_string(q(3, 6)) == "1/2");
  CHECK(to_string(q(-4, 2)) == "-2");
  CHECK(parse_rational("-6/4") == q(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("a/2"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("valuations and p-adic absolute values") {
  CHECK(valuation(q(12, 5), 2) == 2);
  CHECK(valuation(q(12, 5), 5) == -1);
  CHECK(padic_abs(q(12, 5), 2) == q(1, 4));
  CHECK(padic_abs(q(12, 5), 5) == 5);
  CHECK(padic_abs(Rational(0), 3) == 0);
  CHECK(pow(q(2, 3), -2) == q(9, 4));
}

TEST_CASE("product formula for random rationals") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 200; ++i) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    const Rational x = q(a, b);
    Rational prod = abs(x);
    std::map<BigInt, int> primes = factorize(x.get_num());
    for (const auto& [p, e] : factorize(x.get_den())) primes[p] += e;
    for (const auto& [p, e] : primes) prod *= padic_abs(x, p);
    CHECK(prod == 1);
  }
}

TEST_CASE("rank, determinant, inverse, kernel") {
  const QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  CHECK(determinant(m) == 0);
  CHECK_THROWS_AS(inverse(m), DomainError);
  const QMatrix k = kernel_basis(m);
  REQUIRE(k.rows() == 1);
  CHECK(m * k.transpose() == QMatrix(3, 1));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const QMatrix a = random_matrix(rng, 1 + t % 4);
    if (determinant(a) == 0) continue;
    CHECK(a * inverse(a) == QMatrix::identity(a.rows()));
  }
  CHECK(rank(std::vector<std::vector<int>>{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}) == 2);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + t % 5;
    const QMatrix a = random_matrix(rng, n), b = random_matrix(rng, n);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
}

TEST_CASE("characteristic polynomial agrees with det(xI - A) pointwise") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 25; ++t) {
    const QMatrix a = random_matrix(rng, 1 + t % 6);
    const QPolynomial chi(characteristic_polynomial(a));
    CHECK(chi.degree() == static_cast<int>(a.rows()));
    CHECK(chi.leading() == 1);
    for (long x : {-2L, 0L, 1L, 3L}) CHECK(chi(x) == charpoly_at(a, x));
    CHECK(chi(q(1, 2)) == charpoly_at(a, q(1, 2)));
  }
}

TEST_CASE("polynomial division, gcd and root multiplicity") {
  // (x - 1)^2 (x + 2)
  const QPolynomial p({2, -3, 0, 1});
  CHECK(root_multiplicity(p, 1) == 2);
  CHECK(root_multiplicity(p, -2) == 1);
  CHECK(root_multiplicity(p, 3) == 0);
  Rational rem;
  const QPolynomial quotient = divide_linear(p, 1, rem);
  CHECK(rem == 0);
  CHECK(quotient == QPolynomial({-2, 1, 1}));
  CHECK(gcd(p, p.derivative()) == QPolynomial({-1, 1}));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> ac(1 + t % 5), bc(1 + t % 3);
    for (auto& x : ac) x = c(rng);
    for (auto& x : bc) x = c(rng);
    bc.back() = 1;
    const QPolynomial a(ac), b(bc);
    QPolynomial qq, r;
    divmod(a, b, qq, r);
    CHECK(qq * b - (QPolynomial() - r) == a);
    CHECK(r.degree() < b.degree());
  }
}
