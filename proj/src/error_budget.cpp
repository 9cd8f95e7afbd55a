#include "tracegeo/error_budget.hpp"

#include <algorithm>
#include <cmath>

#include "tracegeo/error.hpp"

namespace tracegeo {

void validate(const BudgetParams& p) {
  if (!(p.C2 > 0 && p.C4 > 0 && p.Cn > 0)) throw DomainError("C2, C4 and Cn must be positive");
  if (!(p.beta > 0)) throw DomainError("β must be positive");
  if (!(p.lambda > 0)) throw DomainError("λ must be positive");
  if (!(p.k >= 0)) throw DomainError("k must be nonnegative");
  if (!(p.c_prime >= 0)) throw DomainError("c' must be nonnegative");
  if (!(p.b_conj >= 0 && p.m_nonarch >= 0)) throw DomainError("log powers must be nonnegative");
  if (!(p.epsilon >= 0 && p.epsilon < 1)) throw DomainError("ε must lie in [0, 1)");
}

double beta_max(double C2, double C4, double Cn, double k) {
  if (!(C2 > 0 && C4 > 0 && Cn > 0)) throw DomainError("C2, C4 and Cn must be positive");
  if (!(k >= 0)) throw DomainError("k must be nonnegative");
  const double disc = k * k + 4.0 * C2 * C4 * Cn * Cn;
  // (-k + sqrt(disc)) / (2 C2) = 2 C4 Cn² / (k + sqrt(disc)), free of cancellation.
  return 2.0 * C4 * Cn * Cn / (k + std::sqrt(disc));
}

double lambda_min(double k, double beta, double epsilon, double c_prime) {
  if (!(beta > 0)) throw DomainError("β must be positive");
  if (!(epsilon >= 0 && epsilon < 1)) throw DomainError("ε must lie in [0, 1)");
  if (!(k >= 0 && c_prime >= 0)) throw DomainError("k and c' must be nonnegative");
  return std::max(k / ((1.0 - epsilon) * beta), c_prime * (1.0 + 1e-9));
}

Exponents exponents(const BudgetParams& p) {
  validate(p);
  Exponents e;
  e.e_spec = -p.lambda * (1.0 - p.epsilon) * p.beta;
  e.e1 = -p.C4 * p.Cn * p.Cn / p.beta + p.C2 * p.beta;
  e.e2 = -p.lambda * p.beta;
  const double limit = -p.k + kExponentSlack * std::max(1.0, p.k);
  e.all_ok = e.e_spec <= limit && e.e1 <= limit && e.e2 <= limit;
  e.lambda_above_cprime = p.lambda > p.c_prime;
  return e;
}

double a_exponent(const BudgetParams& p) { return p.b_conj + p.m_nonarch; }

double total_envelope(std::uint64_t N, double k, double a, double vol) {
  if (N < 2) throw DomainError("envelope needs N >= 2");
  if (!(vol > 0)) throw DomainError("volume must be positive");
  const double n = static_cast<double>(N);
  return vol * std::pow(n, -k) * std::pow(std::log(n), a);
}

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (d_ <= 0) throw DomainError("radicand must be positive");
  normalize();
}

void QuadraticSurd::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  d_.canonicalize();
  // A rational square radicand folds into the rational part.
  if (mpz_perfect_square_p(d_.get_num_mpz_t()) && mpz_perfect_square_p(d_.get_den_mpz_t())) {
    BigInt num, den;
    mpz_sqrt(num.get_mpz_t(), d_.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), d_.get_den_mpz_t());
    a_ += b_ * Rational(num, den);
    b_ = 0;
    d_ = 1;
  }
}

double QuadraticSurd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

namespace {

void require_same_field(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.surd_part() != 0 && y.surd_part() != 0 && x.radicand() != y.radicand())
    throw DomainError("surds from different quadratic fields");
}

Rational common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  return x.surd_part() != 0 ? x.radicand() : y.radicand();
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_field(x, y);
  return {x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y)};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_field(x, y);
  return {x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y)};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_field(x, y);
  const Rational d = common_radicand(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_field(x, y);
  const Rational d = common_radicand(x, y);
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
  if (norm == 0) throw DomainError("division by zero in Q(sqrt(D))");
  const QuadraticSurd conj(y.a_ / norm, -y.b_ / norm, d);
  return x * conj;
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
  return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

QuadraticSurd beta_max_exact(const Rational& C2, const Rational& C4, const Rational& Cn, const Rational& k) {
  if (C2 <= 0 || C4 <= 0 || Cn <= 0 || k < 0) throw DomainError("need C2, C4, Cn > 0 and k >= 0");
  const Rational disc = k * k + 4 * C2 * C4 * Cn * Cn;
  return {-k / (2 * C2), Rational(1) / (2 * C2), disc};
}

QuadraticSurd e1_exact(const Rational& C2, const Rational& C4, const Rational& Cn, const QuadraticSurd& beta) {
  const Rational d = beta.radicand();
  const QuadraticSurd c4cn2(C4 * Cn * Cn, 0, d);
  const QuadraticSurd c2(C2, 0, d);
  const QuadraticSurd zero(0, 0, d);
  return zero - c4cn2 / beta + c2 * beta;
}

}  // namespace tracegeo
