#pragma once

#include <optional>
#include <vector>

#include "tracegeo/root_datum.hpp"

namespace tracegeo {

inline constexpr int kMaxPairEnumerationRank = 8;

// Q-relative root datum: relative simple roots (integer vectors in any
// lattice) and, per simple root, the dimension its root space contributes to
// a unipotent radical. Non-simple roots inherit the value of the W-conjugate
// simple root, so the values must be W-invariant.
struct RelativeDatum {
  std::vector<RootVector> simple_roots;
  std::vector<int> nilradical_dims;
};

struct GroupSpec {
  std::vector<SimpleType> factors;
  int torus_rank = 0;
  int restriction_degree = 1;
  std::optional<RelativeDatum> relative;

  RootSystem absolute() const { return build_root_system(factors, torus_rank); }
};

// Throws DomainError on degree < 1, a relative datum of larger rank than the
// absolute one, mismatched lengths or non-positive nilradical dimensions.
void validate(const GroupSpec& g);

// k(G) = 1/2 min over (M, O) != (G, {1}) of dim Ind_M^G O, enumerating the
// standard Levis and the orbits of their simple factors. Exceptional Levi
// factors contribute only the trivial orbit, plus the minimal orbit when the
// Levi is G itself. Scaled by the restriction degree.
int k_by_pairs(const GroupSpec& g);

// min over proper standard parabolics of dim V_P, on the relative datum when
// present and on the absolute one otherwise; scaled by the restriction
// degree. With assume_richardson, throws DomainError unless the absolute
// value agrees with k_by_pairs.
int k_richardson(const GroupSpec& g, bool assume_richardson = false);

// Restriction degree × min over simple factors of half the minimal orbit
// dimension. Throws DomainError for a pure torus.
int k_min_orbit(const GroupSpec& g);

// dim V_P for the relative standard parabolic whose Levi is spanned by the
// relative simple roots listed in `kept`.
int relative_dim_unipotent_radical(const RelativeDatum& rel, const std::vector<std::size_t>& kept);

struct KReport {
  int pairs = 0;
  int richardson_absolute = 0;
  int min_orbit = 0;
  std::optional<int> richardson_relative;
  // Geometric and relative values differ (only meaningful with a relative datum).
  bool relative_disagrees = false;
};

KReport k_report(const GroupSpec& g);

}  // namespace tracegeo
