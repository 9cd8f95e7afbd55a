#pragma once

#include <cstdint>

#include "tracegeo/rational.hpp"

namespace tracegeo {

struct BudgetParams {
  double k = 1.0;        // decay exponent k(G)
  double lambda = 1.0;   // spectral gap
  double epsilon = 0.01;
  double C2 = 1.0;
  double C4 = 1.0;
  double Cn = 1.0;
  double c_prime = 0.0;
  double beta = 1.0;     // T = β log N
  double b_conj = 0.0;   // log power of the global-coefficient bound
  double m_nonarch = 0.0;  // log power of the non-archimedean orbital integral bound
};

// Throws DomainError unless C2, C4, Cn, β, λ > 0, k, c', b, m >= 0 and 0 <= ε < 1.
void validate(const BudgetParams& p);

// Relative slack used when comparing an exponent against -k, so that the
// equality cases produced by beta_max and lambda_min count as satisfied.
inline constexpr double kExponentSlack = 1e-12;

// Largest β with -C4 Cn²/β + C2 β <= -k:
// β* = (-k + sqrt(k² + 4 C2 C4 Cn²)) / (2 C2).
double beta_max(double C2, double C4, double Cn, double k);

// Smallest λ with λ (1-ε) β >= k and λ > c', taken as
// max(k / ((1-ε) β), c' (1 + 1e-9)).
double lambda_min(double k, double beta, double epsilon, double c_prime);

struct Exponents {
  double e_spec = 0.0;  // -λ (1-ε) β : large-time tail of the geometric side
  double e1 = 0.0;      // -C4 Cn² / β + C2 β : E1 with R = Cn log N
  double e2 = 0.0;      // -λ β : E2
  bool all_ok = false;  // each exponent <= -k
  bool lambda_above_cprime = false;
};

Exponents exponents(const BudgetParams& p);

// Reported log power a = b + m.
double a_exponent(const BudgetParams& p);

// vol N^{-k} (ln N)^a; N >= 2.
double total_envelope(std::uint64_t N, double k, double a, double vol);

// Exact element a + b sqrt(D) of Q(sqrt(D)), D > 0 fixed per value.
class QuadraticSurd {
 public:
  QuadraticSurd(Rational a, Rational b, Rational radicand);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_part() const noexcept { return b_; }
  const Rational& radicand() const noexcept { return d_; }
  double to_double() const;

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);

 private:
  void normalize();
  Rational a_, b_, d_;
};

// β* in Q(sqrt(k² + 4 C2 C4 Cn²)).
QuadraticSurd beta_max_exact(const Rational& C2, const Rational& C4, const Rational& Cn, const Rational& k);

// -C4 Cn² / β + C2 β, exactly.
QuadraticSurd e1_exact(const Rational& C2, const Rational& C4, const Rational& Cn, const QuadraticSurd& beta);

}  // namespace tracegeo
