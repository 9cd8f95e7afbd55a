#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tracegeo {

using BigInt = mpz_class;
using Rational = mpq_class;

// "num/den" (or "num" when den == 1).
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "a", "-a", "a/b"; throws DomainError otherwise or if b == 0.
Rational parse_rational(std::string_view text);

Rational abs(const Rational& q);

// Exponent of the prime p in q (q != 0).
int valuation(const Rational& q, const BigInt& p);

// p^(-v_p(q)), the normalized p-adic absolute value; |0|_p = 0.
Rational padic_abs(const Rational& q, const BigInt& p);

// Exact power with a possibly negative exponent (q != 0 when e < 0).
Rational pow(const Rational& q, long e);

}  // namespace tracegeo
