#pragma once

#include <functional>
#include <vector>

#include "tracegeo/rational.hpp"

namespace tracegeo {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// f(t) ~ sum_i a_i t^{α_i} as t -> 0, valid on (0, valid_to], with the
// remainder O(t^{α_max + remainder_order}).
struct AsymptoticExpansion {
  struct Term {
    Rational exponent;
    double coefficient = 0.0;
  };
  std::vector<Term> terms;
  double valid_to = 1.0;
  Rational remainder_order = 1;
};

// Throws DomainError unless exponents strictly increase, valid_to > 0 and
// remainder_order > 0.
void validate(const AsymptoticExpansion& e);

// f on (0, ∞) with |f(t)| <= C e^{-λ t} for t >= 1. The evaluator must be
// reentrant.
struct TailFunction {
  std::function<double(double)> evaluator;
  double C = 1.0;
  double lambda = 1.0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  // Largest accepted disagreement between f minus its singular part and the
  // positive-exponent terms of the expansion at the crossover point.
  double mismatch_tol = 1e-8;
  int max_depth = 15;
};

// Laurent data of M(s) = ∫_0^∞ f(t) t^{s-1} dt at s = 0 and the finite part
// FP_{s=0} M(s) / (s Γ(s)) = c0 + γ_E c_{-1}.
struct MellinFinitePart {
  double pole = 0.0;      // c_{-1}
  double constant = 0.0;  // c_0
  double value = 0.0;     // c0 + γ_E c_{-1}
  // Crossover below which the expansion replaces f, and the expansion/sample
  // disagreement observed there.
  double crossover = 0.0;
  double mismatch = 0.0;
};

// Splits M(s) at t0 = exp.valid_to: the terms with α_i <= 0 are integrated
// analytically on (0, t0], the rest of f on (0, t0] and all of f on [t0, ∞)
// numerically. Near 0, where f minus its singular part cancels
// catastrophically, the positive-exponent terms stand in for it.
//
// Errors: DomainError for a non-integrable configuration or λ <= 0;
// NumericError if the expansion and samples disagree beyond mismatch_tol,
// if the decay bound fails at a sample point, or on quadrature failure.
MellinFinitePart mellin_finite_part(const TailFunction& f, const AsymptoticExpansion& exp,
                                    const QuadratureOptions& opts = {});

inline double fp_mellin(const TailFunction& f, const AsymptoticExpansion& exp,
                        const QuadratureOptions& opts = {}) {
  return mellin_finite_part(f, exp, opts).value;
}

struct TailIntegral {
  double value = 0.0;
  // C e^{-λT} / (λT), a bound on ∫_T^∞ C e^{-λt} t^{-1} dt.
  double envelope = 0.0;
};

// ∫_T^∞ f(t) t^{-1} dt via u = e^{-t}. Throws NumericError if the result
// exceeds the decay envelope or the quadrature does not converge.
TailIntegral truncation_tail(const TailFunction& f, double T, const QuadratureOptions& opts = {});

// 1/4 sum_{p=1..d} (-1)^p p FP_p: the derivative at s = 0 of
// (1/2)(1/2)(1/Γ(s)) ∫ sum_p (-1)^p p h_p(t) t^{s-1} dt, where
// d/ds [M(s)/Γ(s)]_{s=0} equals the finite part of M(s)/(sΓ(s)).
double torsion_constant(const std::vector<std::pair<TailFunction, AsymptoticExpansion>>& inputs, int d,
                        const QuadratureOptions& opts = {});

// Tail function interpolated through samples (t_i, f(t_i)) sorted by t:
// modified Akima on f(t) e^{λt} as a function of ln t. Below the first sample the expansion is used,
// beyond the last f decays like e^{-λt}. Throws DomainError for fewer than
// four samples, non-positive or unsorted t.
TailFunction sampled_tail_function(std::vector<std::pair<double, double>> samples, const AsymptoticExpansion& exp,
                                   double C, double lambda);

// Expansion of t^{shift} e^{-λ t}: sum_{k<=order} (-λ)^k/k! t^{k+shift}.
AsymptoticExpansion exponential_expansion(double lambda, int order, const Rational& shift = 0,
                                          double valid_to = 1.0);

}  // namespace tracegeo
