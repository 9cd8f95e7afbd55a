#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tracegeo/linalg.hpp"
#include "tracegeo/polynomial.hpp"
#include "tracegeo/rational.hpp"

namespace tracegeo {

// D(γ) together with its archimedean absolute value and p-adic valuations.
// |value|_p = p^(-p_valuations[p]).
struct DiscriminantValue {
  Rational value;
  Rational abs_inf;
  std::map<BigInt, int> p_valuations;
  // dim of the centralizer Lie algebra g_γ in gl(n).
  int centralizer_dim = 0;
};

// Matrix of Ad(γ): X -> γ X γ^{-1} on gl(n) in the basis E_11, E_12, ..., E_nn.
QMatrix adjoint_matrix(const QMatrix& gamma);

// Minimal polynomial via the first linear dependency among I, γ, γ², ...
QPolynomial minimal_polynomial(const QMatrix& gamma);

// Generalized Weyl discriminant det(1 - Ad γ) on gl(n)/gl(n)_γ, computed as
// q(1) where det(x - Ad γ) = (x - 1)^m q(x). γ must be invertible and
// semisimple (squarefree minimal polynomial).
//
// With `primes` given, valuations are reported at exactly those primes;
// otherwise at every prime dividing the numerator or denominator.
DiscriminantValue weyl_discriminant(const QMatrix& gamma,
                                    const std::optional<std::vector<BigInt>>& primes = std::nullopt);

// Archimedean place (nullopt) or a finite prime.
using Place = std::optional<BigInt>;

// δ_Q(m) = |det Ad(m) on the nilradical|_place for the standard block
// parabolic of GL(n) with block sizes n_i and block determinants d_i:
// |prod_{i<j} d_i^{n_j} d_j^{-n_i}|_place.
Rational modulus_character(const std::vector<int>& block_sizes, const std::vector<Rational>& block_dets,
                           const Place& place);

}  // namespace tracegeo
