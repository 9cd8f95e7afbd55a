#include "tracegeo/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tracegeo/error.hpp"

namespace tracegeo {

namespace {

constexpr unsigned long kTrialLimit = 100000;

BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, g = 1, q = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * BigInt(abs(BigInt(x - y)))) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        BigInt d = abs(BigInt(x - ys));
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const BigInt& n, std::map<BigInt, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  const BigInt d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(BigInt(n / d), out);
}

}  // namespace

std::map<BigInt, int> factorize(const BigInt& z) {
  if (z == 0) throw DomainError("cannot factor zero");
  BigInt n = abs(z);
  std::map<BigInt, int> out;
  for (unsigned long p = 2; p <= kTrialLimit && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++out[BigInt(p)];
    }
  }
  factor_rec(n, out);
  return out;
}

LevelData level_data(std::uint64_t N) {
  if (N == 0) throw DomainError("level must be >= 1");
  if (N > (std::uint64_t{1} << 63)) throw DomainError("level exceeds 2^63");
  LevelData ld;
  ld.N = N;
  for (const auto& [p, e] : factorize(BigInt(std::to_string(N)))) {
    const auto prime = static_cast<std::uint64_t>(std::stoull(p.get_str()));
    ld.factorization[prime] = e;
    ld.primes.push_back(prime);
  }
  return ld;
}

SlIndex sl_index(int n, std::uint64_t N) {
  if (n < 2) throw DomainError("SL(n) index needs n >= 2");
  const LevelData ld = level_data(N);
  const unsigned long dim = static_cast<unsigned long>(n * n - 1);
  SlIndex out;
  out.value = 1;
  out.small_level = N <= 2;
  for (const auto& [p, e] : ld.factorization) {
    // |SL(n, Z/p^e)| = p^((e-1)(n²-1)) · p^(n(n-1)/2) · prod_{k=2..n} (p^k - 1)
    BigInt local;
    mpz_ui_pow_ui(local.get_mpz_t(), p, (static_cast<unsigned long>(e) - 1) * dim +
                                            static_cast<unsigned long>(n * (n - 1) / 2));
    for (int k = 2; k <= n; ++k) {
      BigInt pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
      local *= pk - 1;
    }
    out.value *= local;
  }
  return out;
}

double conjecture_bound(std::uint64_t N, double b, double c) {
  if (N == 0) throw DomainError("level must be >= 1");
  return c * std::pow(1.0 + std::log(static_cast<double>(N)), b);
}

PrimeFixedReport prime_fixed_check(const std::vector<std::uint64_t>& levels,
                                   const std::optional<std::vector<std::uint64_t>>& declared) {
  if (levels.empty()) throw DomainError("prime-fixed check needs at least one level");
  std::set<std::uint64_t> reference;
  if (declared) {
    reference.insert(declared->begin(), declared->end());
  } else {
    const auto first = level_data(levels.front()).primes;
    reference.insert(first.begin(), first.end());
  }
  PrimeFixedReport rep;
  std::set<std::uint64_t> support;
  for (auto n : levels) {
    bool escapes = false;
    for (auto p : level_data(n).primes) {
      support.insert(p);
      if (!reference.count(p)) escapes = true;
    }
    if (escapes) rep.offenders.push_back(n);
  }
  rep.prime_fixed = rep.offenders.empty();
  rep.reference.assign(reference.begin(), reference.end());
  rep.support.assign(support.begin(), support.end());
  return rep;
}

}  // namespace tracegeo
