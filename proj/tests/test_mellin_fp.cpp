#include <doctest.h>

#include <cmath>

#include "tracegeo/error.hpp"
#include "tracegeo/mellin_fp.hpp"

using namespace tracegeo;

namespace {

TailFunction exp_tail(double lambda) {
  return TailFunction{[lambda](double t) { return std::exp(-lambda * t); }, 1.0, lambda};
}

}  // namespace

TEST_CASE("finite parts of exponentials") {
  CHECK(std::abs(fp_mellin(exp_tail(1.0), exponential_expansion(1.0, 8))) < 1e-9);
  CHECK(std::abs(fp_mellin(exp_tail(2.0), exponential_expansion(2.0, 10)) + std::log(2.0)) < 1e-9);
  for (double lambda : {0.5, 1.0, 2.0, std::exp(1.0), 5.0}) {
    const MellinFinitePart r = mellin_finite_part(exp_tail(lambda), exponential_expansion(lambda, 12));
    CHECK(std::abs(r.value + std::log(lambda)) < 1e-8);
    CHECK(r.pole == 1.0);
  }
}

TEST_CASE("half-integral exponent has no pole") {
  const TailFunction f{[](double t) { return std::exp(-t) / std::sqrt(t); }, 1.0, 1.0};
  const MellinFinitePart r = mellin_finite_part(f, exponential_expansion(1.0, 12, Rational(-1, 2)));
  CHECK(r.pole == 0.0);
  CHECK(std::abs(r.value + 2.0 * std::sqrt(M_PI)) < 1e-7);
}

TEST_CASE("split point independence") {
  const TailFunction f{[](double t) { return std::exp(-t) * std::pow(t, -1.5); }, 1.0, 1.0};
  // Γ(s - 3/2)/Γ(s+1) at s = 0: Γ(-3/2) = 4√π/3.
  const double want = 4.0 * std::sqrt(M_PI) / 3.0;
  for (double t0 : {0.5, 1.0, 2.0}) {
    CHECK(std::abs(fp_mellin(f, exponential_expansion(1.0, 14, Rational(-3, 2), t0)) - want) < 1e-7);
    CHECK(std::abs(fp_mellin(exp_tail(3.0), exponential_expansion(3.0, 16, 0, t0)) + std::log(3.0)) < 1e-9);
  }
}

TEST_CASE("linearity") {
  // 2 e^{-t} - 3 e^{-2t}: expansions add termwise.
  const TailFunction f{[](double t) { return 2 * std::exp(-t) - 3 * std::exp(-2 * t); }, 5.0, 1.0};
  AsymptoticExpansion e = exponential_expansion(1.0, 12);
  const AsymptoticExpansion e2 = exponential_expansion(2.0, 12);
  for (std::size_t i = 0; i < e.terms.size(); ++i)
    e.terms[i].coefficient = 2 * e.terms[i].coefficient - 3 * e2.terms[i].coefficient;
  const double combined = fp_mellin(f, e);
  const double separate = 2 * fp_mellin(exp_tail(1.0), exponential_expansion(1.0, 12)) -
                          3 * fp_mellin(exp_tail(2.0), exponential_expansion(2.0, 12));
  CHECK(std::abs(combined - separate) < 2e-10);
  CHECK(std::abs(combined - 3 * std::log(2.0)) < 1e-8);
}

TEST_CASE("sampled inputs") {
  std::vector<std::pair<double, double>> samples;
  for (int i = 0; i <= 600; ++i) {
    const double t = std::exp(-6.0 + 0.02 * i);
    samples.emplace_back(t, std::exp(-t) / std::sqrt(t));
  }
  const AsymptoticExpansion e = exponential_expansion(1.0, 12, Rational(-1, 2));
  const TailFunction f = sampled_tail_function(samples, e, 1.0, 1.0);
  CHECK(std::abs(fp_mellin(f, e) + 2.0 * std::sqrt(M_PI)) < 1e-7);
  CHECK_THROWS_AS(sampled_tail_function({{1.0, 1.0}}, e, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(sampled_tail_function({{1, 1}, {0.5, 1}, {2, 1}, {3, 1}}, e, 1.0, 1.0), DomainError);
}

TEST_CASE("diagnostics") {
  // Expansion of e^{-2t} offered for e^{-t}.
  CHECK_THROWS_AS(fp_mellin(exp_tail(1.0), exponential_expansion(2.0, 8)), NumericError);
  // Decay certificate violated.
  const TailFunction slow{[](double t) { return std::exp(-0.5 * t); }, 1.0, 1.0};
  CHECK_THROWS_AS(fp_mellin(slow, exponential_expansion(0.5, 8)), NumericError);
  // Expansion too short: remainder not integrable against dt/t.
  AsymptoticExpansion bad;
  bad.terms = {{Rational(-1), 1.0}};
  bad.remainder_order = Rational(1, 2);
  CHECK_THROWS_AS(fp_mellin(exp_tail(1.0), bad), DomainError);
  AsymptoticExpansion unordered;
  unordered.terms = {{Rational(1), 1.0}, {Rational(0), 1.0}};
  CHECK_THROWS_AS(validate(unordered), DomainError);
  CHECK_THROWS_AS(fp_mellin(TailFunction{[](double) { return 0.0; }, 1.0, -1.0}, exponential_expansion(1, 4)),
                  DomainError);
}

TEST_CASE("truncation tails") {
  const TailIntegral e1 = truncation_tail(exp_tail(1.0), 1.0);
  CHECK(std::abs(e1.value - 0.21938393439552029) < 1e-10);
  CHECK(e1.value <= std::exp(-1.0));
  CHECK(truncation_tail(exp_tail(1.0), 20.0).value < 3e-10);
  CHECK(std::abs(truncation_tail(exp_tail(2.0), 1.0).value) <= std::exp(-2.0));
  double prev = 1.0;
  for (double T = 1.0; T <= 30.0; T += 0.5) {
    const double v = truncation_tail(exp_tail(1.0), T).value;
    CHECK(v <= prev);
    prev = v;
  }
  CHECK_THROWS_AS(truncation_tail(exp_tail(1.0), 0.5), DomainError);
}

TEST_CASE("torsion constant") {
  const QuadratureOptions opts;
  CHECK(std::abs(torsion_constant({{exp_tail(1.0), exponential_expansion(1.0, 10)}}, 1)) < 1e-9);
  CHECK(std::abs(torsion_constant({{exp_tail(1.0), exponential_expansion(1.0, 10)},
                                   {exp_tail(2.0), exponential_expansion(2.0, 12)}},
                                  2) +
                 std::log(2.0) / 2.0) < 1e-9);
  const TailFunction zero{[](double) { return 0.0; }, 1.0, 1.0};
  AsymptoticExpansion none;
  CHECK(torsion_constant({{zero, none}, {zero, none}, {zero, none}}, 3) == 0.0);
  CHECK_THROWS_AS(torsion_constant({{zero, none}}, 2), DomainError);
}
