#include "tracegeo/rational.hpp"

#include <cctype>

#include "tracegeo/error.hpp"

namespace tracegeo {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) throw DomainError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw DomainError("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

namespace {

int int_valuation(BigInt z, const BigInt& p) {
  int v = 0;
  while (z != 0 && mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t())) {
    z /= p;
    ++v;
  }
  return v;
}

}  // namespace

int valuation(const Rational& q, const BigInt& p) {
  if (q == 0) throw DomainError("valuation of zero");
  return int_valuation(q.get_num(), p) - int_valuation(q.get_den(), p);
}

Rational padic_abs(const Rational& q, const BigInt& p) {
  if (q == 0) return Rational(0);
  return pow(Rational(p), -valuation(q, p));
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw DomainError("negative power of zero");
    return pow(Rational(1) / q, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

}  // namespace tracegeo
