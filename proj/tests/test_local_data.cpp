#include <doctest.h>

#include <random>

#include "tracegeo/arithmetic.hpp"
#include "tracegeo/error.hpp"
#include "tracegeo/local_data.hpp"
#include "tracegeo/oracles.hpp"

using namespace tracegeo;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

QMatrix diag(const std::vector<Rational>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// Random matrix with small entries and nonzero determinant.
QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> e(-3, 3);
  for (;;) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
    if (determinant(m) != 0) return m;
  }
}

std::vector<std::vector<Rational>> rows_of(const QMatrix& m) {
  std::vector<std::vector<Rational>> r;
  for (std::size_t i = 0; i < m.rows(); ++i) r.push_back(m.row(i));
  return r;
}

}  // namespace

TEST_CASE("discriminant examples") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto d = weyl_discriminant(QMatrix::identity(n));
    CHECK(d.value == 1);
    CHECK(d.centralizer_dim == static_cast<int>(n * n));
  }
  const auto d21 = weyl_discriminant(diag({2, 1}));
  CHECK(d21.value == q(-1, 2));
  CHECK(d21.abs_inf == q(1, 2));
  CHECK(d21.p_valuations.at(2) == -1);
  CHECK(padic_abs(d21.value, 2) == 2);
  CHECK(weyl_discriminant(diag({q(3, 7), q(3, 7)})).value == 1);
}

TEST_CASE("discriminant at requested primes") {
  const auto d = weyl_discriminant(diag({2, 1}), std::vector<BigInt>{3, 2});
  CHECK(d.p_valuations.size() == 2);
  CHECK(d.p_valuations.at(3) == 0);
  CHECK(d.p_valuations.at(2) == -1);
}

TEST_CASE("discriminant errors") {
  CHECK_THROWS_AS(weyl_discriminant(diag({0, 1})), DomainError);
  CHECK_THROWS_AS(weyl_discriminant(QMatrix::from_rows({{1, 1}, {0, 1}})), DomainError);
  CHECK_THROWS_AS(weyl_discriminant(QMatrix(2, 3)), DomainError);
}

TEST_CASE("diagonal matrices: product formula and restricted determinant") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3), len(1, 4);
  for (int t = 0; t < 60; ++t) {
    std::vector<Rational> d(static_cast<std::size_t>(len(rng)));
    for (auto& x : d) {
      int p = 0;
      while (p == 0) p = num(rng);
      x = q(p, den(rng));
    }
    const auto v = weyl_discriminant(diag(d));
    CHECK(v.value == oracle::diagonal_discriminant(d));
    CHECK(v.value == oracle::restricted_discriminant(rows_of(diag(d))));
  }
}

TEST_CASE("conjugation invariance and the product formula") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    // Semisimple non-diagonal: a companion-like matrix with distinct rational
    // eigenvalues conjugated by a random g.
    std::vector<Rational> eig;
    for (std::size_t i = 0; i < n; ++i) eig.push_back(q(static_cast<long>(i) + 1 + t % 3, 1 + (t % 2)));
    const QMatrix g = random_invertible(rng, n);
    const QMatrix gamma = g * diag(eig) * inverse(g);
    const auto a = weyl_discriminant(gamma);
    CHECK(a.value == weyl_discriminant(diag(eig)).value);
    CHECK(a.value == oracle::restricted_discriminant(rows_of(gamma)));
    const QMatrix h = random_invertible(rng, n);
    CHECK(weyl_discriminant(h * gamma * inverse(h)).value == a.value);

    Rational prod = a.abs_inf;
    for (const auto& [p, v] : a.p_valuations) prod *= padic_abs(a.value, p);
    if (a.value != 0) CHECK(prod == 1);
  }
}

TEST_CASE("semisimple with irrational eigenvalues") {
  // Rotation-like [[0,-1],[1,0]]: eigenvalues ±i, D = (1 - i/(-i))(1 - (-i)/i) = 4.
  const auto d = weyl_discriminant(QMatrix::from_rows({{0, -1}, {1, 0}}));
  CHECK(d.value == 4);
  CHECK(d.centralizer_dim == 2);
}

TEST_CASE("modulus character") {
  CHECK(modulus_character({3}, {q(5, 2)}, std::nullopt) == 1);
  CHECK(modulus_character({1, 1}, {q(3), q(-2)}, std::nullopt) == q(3, 2));
  CHECK(modulus_character({2, 1}, {q(6), q(2)}, std::nullopt) == q(6, 4));
  CHECK(modulus_character({1, 1}, {q(3), q(2)}, BigInt(3)) == q(1, 3));
  CHECK_THROWS_AS(modulus_character({1, 1}, {q(0), q(2)}, std::nullopt), DomainError);

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> e(1, 9);
  for (int t = 0; t < 40; ++t) {
    const std::vector<int> sizes{1 + t % 2, 2, 1};
    std::vector<Rational> a, b, ab;
    for (int i = 0; i < 3; ++i) {
      a.push_back(q(e(rng), e(rng)));
      b.push_back(q(-e(rng), e(rng)));
      ab.push_back(a.back() * b.back());
    }
    for (const Place& place : {Place(), Place(BigInt(2)), Place(BigInt(3)), Place(BigInt(7))})
      CHECK(modulus_character(sizes, ab, place) ==
            modulus_character(sizes, a, place) * modulus_character(sizes, b, place));
  }
}
