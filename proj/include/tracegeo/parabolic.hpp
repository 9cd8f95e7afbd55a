#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tracegeo/rational.hpp"
#include "tracegeo/root_datum.hpp"
#include "tracegeo/root_set.hpp"

namespace tracegeo {

// Largest total rank accepted by the parabolic enumeration.
inline constexpr int kMaxEnumerationRank = 6;
// Largest tuple length accepted by count_contributing_tuples.
inline constexpr int kMaxTupleLength = 8;

// A closed subset P of the roots with P ∪ -P = R: a parabolic subgroup
// containing the maximal split torus. The root system must outlive it.
struct ParabolicSubset {
  const RootSystem* system = nullptr;
  RootSet members;

  friend bool operator==(const ParabolicSubset& a, const ParabolicSubset& b) {
    return a.members == b.members;
  }
};

// A Levi subgroup containing the torus, represented by its (symmetric,
// closed, span-saturated) set of roots. a_M_dim = dim a_M.
struct LeviDatum {
  const RootSystem* system = nullptr;
  RootSet levi_roots;
  int a_M_dim = 0;

  friend bool operator==(const LeviDatum& a, const LeviDatum& b) { return a.levi_roots == b.levi_roots; }
};

bool is_closed(const RootSystem& rs, const RootSet& s);
bool is_parabolic(const RootSystem& rs, const RootSet& s);

// Rank of the span of a set of roots.
int span_rank(const RootSystem& rs, const RootSet& s);

// Wraps a root set as a ParabolicSubset after validating it.
ParabolicSubset make_parabolic(const RootSystem& rs, RootSet members);

// The Levi datum with the given roots. Throws DomainError when the roots are
// not R ∩ span(roots) with -roots = roots (i.e. not the Levi of any parabolic).
LeviDatum make_levi(const RootSystem& rs, RootSet levi_roots);

// Standard parabolic P_J = positive roots ∪ roots spanned by simple roots J.
ParabolicSubset standard_parabolic(const RootSystem& rs, const std::vector<std::size_t>& simple_subset);
LeviDatum standard_levi(const RootSystem& rs, const std::vector<std::size_t>& simple_subset);
LeviDatum minimal_levi(const RootSystem& rs);
LeviDatum full_levi(const RootSystem& rs);

// Every parabolic subset of rs, ordered lexicographically on sorted member
// index lists. Enumerated as the W-orbits of the standard parabolics.
// Throws ResourceError when rs.rank() > kMaxEnumerationRank.
std::vector<ParabolicSubset> enumerate_parabolic_subsets(const RootSystem& rs);

LeviDatum levi_of(const ParabolicSubset& p);

// dim V_P = #{a in P : -a not in P}.
int dim_unipotent_radical(const ParabolicSubset& p);

ParabolicSubset opposite(const ParabolicSubset& p);

struct FSets {
  std::vector<ParabolicSubset> F;
  std::vector<LeviDatum> L;
  std::vector<std::pair<LeviDatum, std::vector<ParabolicSubset>>> P_by_L;
};

// F(M), L(M) and the grouping F(M) = ⊔_{L in L(M)} P(L).
FSets f_sets(const RootSystem& rs, const LeviDatum& m);

// dim a^L_M for M ⊆ L.
int relative_a_dim(const RootSystem& rs, const LeviDatum& m, const LeviDatum& l);

// True iff a^{L1}_M ⊕ a^{L2}_M -> a^G_M is an isomorphism, the condition for
// d^G_M(L1, L2) != 0. Computed with exact rational linear algebra.
bool d_nonvanishing(const RootSystem& rs, const LeviDatum& m, const LeviDatum& l1, const LeviDatum& l2);

// Number of tuples in L(M)^s_size with at most dim a^G_M entries != M.
BigInt count_contributing_tuples(const RootSystem& rs, const LeviDatum& m, int s_size);

}  // namespace tracegeo
