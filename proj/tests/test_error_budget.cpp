#include <doctest.h>

#include <cmath>
#include <random>

#include "tracegeo/error.hpp"
#include "tracegeo/error_budget.hpp"

using namespace tracegeo;

TEST_CASE("beta_max") {
  CHECK(std::abs(beta_max(1, 1, 1, 1) - (std::sqrt(5.0) - 1) / 2) < 1e-12);
  CHECK(beta_max(1, 1, 1, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(beta_max(2, 1, 1, 1) == doctest::Approx(0.5).epsilon(1e-15));
  // No cancellation trouble when k dominates.
  const double b = beta_max(1, 1, 1, 1e8);
  CHECK(b == doctest::Approx(1e-8).epsilon(1e-12));
}

TEST_CASE("beta_max monotonicity") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  for (int t = 0; t < 200; ++t) {
    const double C2 = u(rng), C4 = u(rng), Cn = u(rng), k = u(rng), h = 0.3;
    const double b = beta_max(C2, C4, Cn, k);
    CHECK(beta_max(C2, C4, Cn, k + h) < b);
    CHECK(beta_max(C2 + h, C4, Cn, k) < b);
    CHECK(beta_max(C2, C4 + h, Cn, k) > b);
    CHECK(beta_max(C2, C4, Cn + h, k) > b);
  }
}

TEST_CASE("lambda_min") {
  const double beta = (std::sqrt(5.0) - 1) / 2;
  CHECK(lambda_min(1, beta, 0.01, 0.1) == doctest::Approx(1.634378).epsilon(1e-6));
  CHECK(lambda_min(1, 1, 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(lambda_min(2, 0.5, 0.5, 10) == doctest::Approx(10 * (1 + 1e-9)).epsilon(1e-15));
}

TEST_CASE("exponents") {
  BudgetParams p;
  p.k = 1;
  p.epsilon = 0.01;
  p.c_prime = 0;
  p.beta = beta_max(1, 1, 1, 1);
  p.lambda = lambda_min(p.k, p.beta, p.epsilon, p.c_prime);
  Exponents e = exponents(p);
  CHECK(e.e1 == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.all_ok);

  p.lambda = 0.1;
  p.beta = 0.1;
  e = exponents(p);
  CHECK_FALSE(e.all_ok);

  p.k = 0;
  p.beta = 0.7;
  p.lambda = 0.3;
  CHECK(exponents(p).all_ok == (exponents(p).e1 <= 0));
}

TEST_CASE("random feasible points are feasible") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> c(0.05, 20.0), k(0.0, 12.0), eps(1e-4, 0.5), cp(0.0, 8.0);
  for (int t = 0; t < 500; ++t) {
    BudgetParams p;
    p.C2 = c(rng);
    p.C4 = c(rng);
    p.Cn = c(rng);
    p.k = k(rng);
    p.epsilon = eps(rng);
    p.c_prime = cp(rng);
    p.beta = beta_max(p.C2, p.C4, p.Cn, p.k);
    p.lambda = lambda_min(p.k, p.beta, p.epsilon, p.c_prime);
    const Exponents e = exponents(p);
    CHECK(e.all_ok);
    CHECK(e.lambda_above_cprime);
  }
}

TEST_CASE("exact beta_max solves e1 = -k") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> num(0, 20), den(1, 7);
  auto draw = [&](bool positive) {
    int n = num(rng);
    if (positive && n == 0) n = 1;
    Rational q(n, den(rng));
    q.canonicalize();
    return q;
  };
  for (int t = 0; t < 200; ++t) {
    const Rational C2 = draw(true), C4 = draw(true), Cn = draw(true), k = draw(false);
    const QuadraticSurd beta = beta_max_exact(C2, C4, Cn, k);
    CHECK(e1_exact(C2, C4, Cn, beta) == QuadraticSurd(-k, 0, beta.radicand()));
    CHECK(std::abs(beta.to_double() - beta_max(C2.get_d(), C4.get_d(), Cn.get_d(), k.get_d())) <
          1e-12 * (1 + beta.to_double()));
  }
  // Square discriminant folds to a rational.
  const QuadraticSurd half = beta_max_exact(2, 1, 1, 1);
  CHECK(half.surd_part() == 0);
  CHECK(half.rational_part() == Rational(1, 2));
}

TEST_CASE("quadratic surd arithmetic") {
  const QuadraticSurd s(1, 1, 5), t(2, -1, 5);
  CHECK(s * t == QuadraticSurd(-3, 1, 5));
  CHECK((s * t) / t == s);
  CHECK(s - s == QuadraticSurd(0, 0, 5));
  CHECK_THROWS_AS(QuadraticSurd(1, 1, -2), DomainError);
}

TEST_CASE("envelope and a-exponent") {
  CHECK(total_envelope(10, 1, 0, 1) == doctest::Approx(0.1));
  CHECK(total_envelope(100, 2, 3, 1) == doctest::Approx(std::pow(std::log(100.0), 3) / 1e4).epsilon(1e-12));
  CHECK(total_envelope(100, 2, 3, 1) == doctest::Approx(0.009770).epsilon(1e-3));
  CHECK_THROWS_AS(total_envelope(1, 1, 0, 1), DomainError);
  const double k = 1.7, a = 2.5;
  const double ref = total_envelope(2, k, a, 3.0) * std::pow(2.0, k) / std::pow(std::log(2.0), a);
  for (std::uint64_t N : {3ULL, 17ULL, 1000ULL, 123456789ULL})
    CHECK(total_envelope(N, k, a, 3.0) * std::pow(double(N), k) / std::pow(std::log(double(N)), a) ==
          doctest::Approx(ref).epsilon(1e-12));
  BudgetParams p;
  p.b_conj = 1.5;
  p.m_nonarch = 2;
  CHECK(a_exponent(p) == 3.5);
}

TEST_CASE("parameter validation") {
  BudgetParams p;
  CHECK_NOTHROW(validate(p));
  p.epsilon = 1.0;
  CHECK_THROWS_AS(validate(p), DomainError);
  p.epsilon = 0.1;
  p.C2 = 0;
  CHECK_THROWS_AS(validate(p), DomainError);
  p.C2 = 1;
  p.k = -1;
  CHECK_THROWS_AS(validate(p), DomainError);
}
