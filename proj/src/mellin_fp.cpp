#include "tracegeo/mellin_fp.hpp"

#include <boost/math/interpolators/makima.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "tracegeo/error.hpp"

namespace tracegeo {

namespace {

double to_double(const Rational& q) { return q.get_d(); }

void check_decay(const TailFunction& f, double abs_tol) {
  if (!(f.lambda > 0.0)) throw DomainError("decay rate λ must be positive");
  if (!(f.C > 0.0)) throw DomainError("decay constant C must be positive");
  if (!f.evaluator) throw DomainError("tail function has no evaluator");
  for (double t : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
    const double bound = f.C * std::exp(-f.lambda * t);
    const double v = f.evaluator(t);
    if (!std::isfinite(v) || std::abs(v) > bound * (1.0 + 1e-9) + abs_tol)
      throw NumericError("decay bound |f(t)| <= C e^{-λt} fails at t = " + std::to_string(t));
  }
}

// ∫_a^b g(t) dt / t computed as ∫_{ln a}^{ln b} g(e^u) du.
double integrate_log(const std::function<double(double)>& g, double a, double b, const QuadratureOptions& opts) {
  if (!(b > a)) return 0.0;
  double err = 0.0, l1 = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double u) { return g(std::exp(u)); }, std::log(a), std::log(b),
      static_cast<unsigned>(opts.max_depth), 1e-12, &err, &l1);
  if (!std::isfinite(v) || err > 10.0 * std::max(opts.abs_tol, 1e-13 * l1))
    throw NumericError("quadrature on (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") did not converge (error estimate " + std::to_string(err) + ")");
  return v;
}

// ∫_T^∞ f(t) dt / t, cut where the decay bound drops below e^{-50}.
double integrate_tail(const TailFunction& f, double T, const QuadratureOptions& opts) {
  const double end = T + (50.0 + std::max(0.0, std::log(f.C))) / f.lambda;
  return integrate_log(f.evaluator, T, end, opts);
}

}  // namespace

void validate(const AsymptoticExpansion& e) {
  if (!(e.valid_to > 0.0)) throw DomainError("expansion validity bound t0 must be positive");
  if (e.remainder_order <= 0) throw DomainError("remainder order must be positive");
  for (std::size_t i = 1; i < e.terms.size(); ++i)
    if (e.terms[i].exponent <= e.terms[i - 1].exponent)
      throw DomainError("expansion exponents must be strictly increasing");
}

MellinFinitePart mellin_finite_part(const TailFunction& f, const AsymptoticExpansion& exp,
                                    const QuadratureOptions& opts) {
  validate(exp);
  check_decay(f, opts.abs_tol);

  // f - (terms with α <= 0) = O(t^lead) near 0; need lead > 0.
  Rational lead = exp.terms.empty() ? exp.remainder_order : exp.terms.back().exponent + exp.remainder_order;
  for (const auto& term : exp.terms)
    if (term.exponent > 0 && term.exponent < lead) lead = term.exponent;
  if (lead <= 0)
    throw DomainError("expansion too short: f minus its singular part is not integrable against dt/t at 0");

  const double t0 = exp.valid_to;
  MellinFinitePart out;

  // Singular terms on (0, t0]: a t0^{s+α}/(s+α).
  for (const auto& term : exp.terms) {
    if (term.exponent > 0) continue;
    if (term.exponent == 0) {
      out.pole += term.coefficient;
      out.constant += term.coefficient * std::log(t0);
    } else {
      const double alpha = to_double(term.exponent);
      out.constant += term.coefficient * std::pow(t0, alpha) / alpha;
    }
  }

  auto singular = [&](double t) {
    double s = 0.0;
    for (const auto& term : exp.terms)
      if (term.exponent <= 0) s += term.coefficient * std::pow(t, to_double(term.exponent));
    return s;
  };
  auto regular = [&](double t) {
    double s = 0.0;
    for (const auto& term : exp.terms)
      if (term.exponent > 0) s += term.coefficient * std::pow(t, to_double(term.exponent));
    return s;
  };
  auto difference = [&](double t) { return f.evaluator(t) - singular(t); };

  // Crossover: where f - singular agrees best with the positive terms.
  // Truncation error grows with t, cancellation error as t -> 0.
  double best_delta = t0;
  double best_mismatch = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= 60; ++j) {
    const double delta = std::ldexp(t0, -j);
    const double reg = regular(delta);
    const double mismatch = std::abs(difference(delta) - reg);
    if (!std::isfinite(mismatch)) continue;
    // Below the cancellation floor any expansion "agrees"; demand the positive terms be resolved.
    if (reg != 0.0 && mismatch > 1e-3 * std::abs(reg)) continue;
    if (mismatch < best_mismatch) {
      best_mismatch = mismatch;
      best_delta = delta;
    }
  }
  if (!(best_mismatch <= opts.mismatch_tol))
    throw NumericError("expansion does not match f: best agreement " + std::to_string(best_mismatch) +
                       " exceeds tolerance " + std::to_string(opts.mismatch_tol));
  out.crossover = best_delta;
  out.mismatch = best_mismatch;

  double head = 0.0;
  for (const auto& term : exp.terms) {
    if (term.exponent <= 0) continue;
    const double alpha = to_double(term.exponent);
    head += term.coefficient * std::pow(best_delta, alpha) / alpha;
  }
  const double body = integrate_log(difference, best_delta, t0, opts);
  const double tail = integrate_tail(f, t0, opts);

  out.constant += head + body + tail;
  out.value = out.constant + kEulerGamma * out.pole;
  return out;
}

TailIntegral truncation_tail(const TailFunction& f, double T, const QuadratureOptions& opts) {
  if (!(T >= 1.0)) throw DomainError("truncation point T must be >= 1");
  check_decay(f, opts.abs_tol);
  TailIntegral out;
  out.value = integrate_tail(f, T, opts);
  out.envelope = f.C * std::exp(-f.lambda * T) / (f.lambda * T);
  if (std::abs(out.value) > out.envelope * (1.0 + 1e-9) + opts.abs_tol)
    throw NumericError("tail integral " + std::to_string(out.value) + " exceeds decay envelope " +
                       std::to_string(out.envelope));
  return out;
}

double torsion_constant(const std::vector<std::pair<TailFunction, AsymptoticExpansion>>& inputs, int d,
                        const QuadratureOptions& opts) {
  if (d < 1) throw DomainError("dimension d must be positive");
  if (static_cast<int>(inputs.size()) != d) throw DomainError("need exactly one input per degree p = 1..d");
  double acc = 0.0;
  for (int p = 1; p <= d; ++p) {
    const auto& [f, e] = inputs[static_cast<std::size_t>(p - 1)];
    acc += (p % 2 == 0 ? 1.0 : -1.0) * p * fp_mellin(f, e, opts);
  }
  return acc / 4.0;
}

TailFunction sampled_tail_function(std::vector<std::pair<double, double>> samples, const AsymptoticExpansion& exp,
                                   double C, double lambda) {
  validate(exp);
  if (samples.size() < 4) throw DomainError("need at least four samples");
  std::vector<double> u, v;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [t, y] = samples[i];
    if (!(t > 0.0) || !std::isfinite(y)) throw DomainError("samples need t > 0 and finite values");
    if (i > 0 && !(t > samples[i - 1].first)) throw DomainError("sample abscissae must strictly increase");
    u.push_back(std::log(t));
    v.push_back(y * std::exp(lambda * t));
  }
  const double t_lo = samples.front().first, t_hi = samples.back().first, h_hi = v.back();
  auto spline = std::make_shared<boost::math::interpolators::makima<std::vector<double>>>(std::move(u), std::move(v));
  auto terms = exp.terms;
  TailFunction f;
  f.C = C;
  f.lambda = lambda;
  f.evaluator = [spline, terms, t_lo, t_hi, h_hi, lambda](double t) {
    if (t < t_lo) {
      double s = 0.0;
      for (const auto& term : terms) s += term.coefficient * std::pow(t, term.exponent.get_d());
      return s;
    }
    if (t > t_hi) return h_hi * std::exp(-lambda * t);
    return (*spline)(std::log(t)) * std::exp(-lambda * t);
  };
  return f;
}

AsymptoticExpansion exponential_expansion(double lambda, int order, const Rational& shift, double valid_to) {
  AsymptoticExpansion e;
  e.valid_to = valid_to;
  e.remainder_order = 1;
  double coeff = 1.0;
  for (int k = 0; k <= order; ++k) {
    e.terms.push_back({Rational(k) + shift, coeff});
    coeff *= -lambda / (k + 1);
  }
  return e;
}

}  // namespace tracegeo
