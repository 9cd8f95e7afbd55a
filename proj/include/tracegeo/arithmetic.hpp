#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tracegeo/rational.hpp"

namespace tracegeo {

// Level N with its factorization; primes is S(N) without the infinite place.
struct LevelData {
  std::uint64_t N = 1;
  std::map<std::uint64_t, int> factorization;
  std::vector<std::uint64_t> primes;
};

// Throws DomainError for N = 0 or N > 2^63.
LevelData level_data(std::uint64_t N);

// Prime factorization of |z| (z != 0): trial division by small primes, then
// Pollard–Brent on whatever cofactor remains.
std::map<BigInt, int> factorize(const BigInt& z);

struct SlIndex {
  BigInt value;
  // N in {1, 2}: the value is the raw order |SL(n, Z/N)|.
  bool small_level = false;
};

// |SL(n, Z/N)| = N^(n²-1) prod_{p | N} prod_{k=2..n} (1 - p^-k), exactly.
// This is [SL(n, Z) : Γ(N)] by strong approximation.
SlIndex sl_index(int n, std::uint64_t N);

// c (1 + ln N)^b.
double conjecture_bound(std::uint64_t N, double b, double c);

struct PrimeFixedReport {
  bool prime_fixed = true;
  std::vector<std::uint64_t> reference;  // declared set, or the support of the first level
  std::vector<std::uint64_t> support;    // union of all prime supports
  std::vector<std::uint64_t> offenders;  // levels with a prime outside the reference
};

PrimeFixedReport prime_fixed_check(const std::vector<std::uint64_t>& levels,
                                   const std::optional<std::vector<std::uint64_t>>& declared = std::nullopt);

}  // namespace tracegeo
