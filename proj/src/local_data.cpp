#include "tracegeo/local_data.hpp"

#include "tracegeo/arithmetic.hpp"
#include "tracegeo/error.hpp"

namespace tracegeo {

QMatrix adjoint_matrix(const QMatrix& gamma) {
  const std::size_t n = gamma.rows();
  const QMatrix inv = inverse(gamma);
  QMatrix ad(n * n, n * n);
  // Ad(γ) E_ij = sum_{k,l} γ_ki (γ^-1)_jl E_kl
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (gamma(k, i) == 0) continue;
        for (std::size_t l = 0; l < n; ++l) ad(k * n + l, i * n + j) = gamma(k, i) * inv(j, l);
      }
  return ad;
}

QPolynomial minimal_polynomial(const QMatrix& gamma) {
  const std::size_t n = gamma.rows();
  std::vector<QMatrix> powers = {QMatrix::identity(n)};
  for (std::size_t deg = 1; deg <= n; ++deg) {
    powers.push_back(powers.back() * gamma);
    QMatrix cols(n * n, powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t e = 0; e < n * n; ++e) cols(e, c) = powers[c](e / n, e % n);
    const QMatrix ker = kernel_basis(cols);
    if (ker.rows() == 0) continue;
    return QPolynomial(ker.row(0)).monic();
  }
  throw NumericError("minimal polynomial degree exceeds n");
}

DiscriminantValue weyl_discriminant(const QMatrix& input, const std::optional<std::vector<BigInt>>& primes) {
  QMatrix gamma = input;
  for (std::size_t i = 0; i < gamma.rows(); ++i)
    for (std::size_t j = 0; j < gamma.cols(); ++j) gamma(i, j).canonicalize();
  if (gamma.rows() == 0 || gamma.rows() != gamma.cols()) throw DomainError("γ must be a nonempty square matrix");
  if (determinant(gamma) == 0) throw DomainError("γ is not invertible");
  const QPolynomial mu = minimal_polynomial(gamma);
  if (gcd(mu, mu.derivative()).degree() > 0)
    throw DomainError("γ is not semisimple (minimal polynomial not squarefree); pass its semisimple part");

  const QMatrix ad = adjoint_matrix(gamma);
  const QPolynomial chi(characteristic_polynomial(ad));
  const int m = root_multiplicity(chi, 1);
  QPolynomial q = chi;
  for (int i = 0; i < m; ++i) {
    Rational rem;
    q = divide_linear(q, 1, rem);
  }
  DiscriminantValue out;
  out.value = q(1);
  out.centralizer_dim = m;
  if (out.value == 0) throw NumericError("discriminant vanished after removing the eigenvalue 1");
  out.abs_inf = abs(out.value);
  if (primes) {
    for (const auto& p : *primes) {
      if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) throw DomainError(p.get_str() + " is not prime");
      out.p_valuations[p] = valuation(out.value, p);
    }
  } else {
    for (const auto& [p, e] : factorize(out.value.get_num())) out.p_valuations[p] = e;
    for (const auto& [p, e] : factorize(out.value.get_den())) out.p_valuations[p] = -e;
  }
  return out;
}

Rational modulus_character(const std::vector<int>& block_sizes, const std::vector<Rational>& block_dets,
                           const Place& place) {
  if (block_sizes.size() != block_dets.size()) throw DomainError("block sizes and determinants differ in length");
  for (int s : block_sizes)
    if (s <= 0) throw DomainError("block sizes must be positive");
  for (const auto& d : block_dets)
    if (d == 0) throw DomainError("block determinant is zero");
  Rational x = 1;
  for (std::size_t i = 0; i < block_sizes.size(); ++i)
    for (std::size_t j = i + 1; j < block_sizes.size(); ++j)
      x *= pow(block_dets[i], block_sizes[j]) * pow(block_dets[j], -block_sizes[i]);
  if (!place) return abs(x);
  if (*place < 2 || mpz_probab_prime_p(place->get_mpz_t(), 40) == 0)
    throw DomainError(place->get_str() + " is not prime");
  return padic_abs(x, *place);
}

}  // namespace tracegeo
