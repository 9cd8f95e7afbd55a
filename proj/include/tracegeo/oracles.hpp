#pragma once

// Brute-force reference computations. Nothing here calls the algorithms it
// is used to check; only the exact number types are shared.

#include <cstdint>
#include <set>
#include <vector>

#include "tracegeo/rational.hpp"

namespace tracegeo::oracle {

using IntVector = std::vector<int>;

// Every subset S of `roots` with S closed under root addition and
// S ∪ -S = roots, each returned as a sorted index list. Tries all 2^|roots|
// subsets; refuses more than 20 roots.
std::vector<std::vector<std::size_t>> closed_parabolic_subsets(const std::vector<IntVector>& roots);

// #{g in M_n(Z/N) : det g = 1} by enumeration, n in {2, 3}.
std::uint64_t sl_order_by_enumeration(int n, int N);

// prod over ordered pairs i != j with λ_i != λ_j of (1 - λ_i/λ_j).
Rational diagonal_discriminant(const std::vector<Rational>& diagonal);

// det(1 - Ad γ) restricted to the image of (Ad γ - 1), built entry by entry
// from γ and γ^{-1} (computed here by cofactors), for a diagonalizable γ.
Rational restricted_discriminant(const std::vector<std::vector<Rational>>& gamma);

// Number of tuples in {0..levis-1}^length with at most max_other entries
// different from `base`, by enumeration.
std::uint64_t tuples_by_enumeration(std::size_t levis, std::size_t base, int length, int max_other);

// All partitions of n, largest part first.
std::vector<std::vector<int>> partitions(int n);

// n^2 - sum of squared column lengths, from the Young diagram directly.
int gl_orbit_dim_by_diagram(const std::vector<int>& partition);

}  // namespace tracegeo::oracle

namespace tracegeo::oracle {

// Orbit dimension for so(m) (orthogonal = true) or sp(m), from
// dim g - dim g_x with dim g_x = (sum_{i,j} min(λ_i, λ_j) ∓ #odd parts) / 2.
// Does not check that the partition labels an orbit.
int classical_orbit_dim(bool orthogonal, const std::vector<int>& partition);

// Whether a partition of m labels a nilpotent orbit in so(m) / sp(m):
// even (resp. odd) parts occur with even multiplicity.
bool classical_partition_ok(bool orthogonal, const std::vector<int>& partition);

}  // namespace tracegeo::oracle
