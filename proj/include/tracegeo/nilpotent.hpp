#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tracegeo/root_datum.hpp"

namespace tracegeo {

inline constexpr int kMaxOrbitListRank = 20;

// gl(n), which shares the unipotent orbits of sl(n) (type A_{n-1}).
struct GlType {
  int n = 1;
  friend bool operator==(const GlType&, const GlType&) = default;
};

using AlgebraType = std::variant<GlType, SimpleType>;

std::string algebra_name(const AlgebraType& t);

using Partition = std::vector<int>;

enum class OrbitKind { Partition, Trivial, Minimal };

struct OrbitLabel {
  OrbitKind kind = OrbitKind::Trivial;
  Partition partition;  // decreasing, only for OrbitKind::Partition
  AlgebraType type = GlType{1};
  // Type D partition with only even parts: one label, two orbits of equal dimension.
  bool very_even = false;

  std::string label() const;
};

// Transposed (conjugate) partition.
Partition transpose(const Partition& p);

// Whether p labels a unipotent orbit of the given classical type.
bool is_valid_partition(const AlgebraType& t, const Partition& p);

// All orbit labels of a classical type in reverse lexicographic order.
// Throws DomainError for exceptional types and ResourceError beyond rank 20.
std::vector<OrbitLabel> list_orbits(const AlgebraType& t);

int orbit_dim(const OrbitLabel& label);

// 2 (h^vee - 1).
int min_orbit_dim(const SimpleType& t);

// dim Ind_{M}^{G} O = dim O + 2 dim V_P.
int induced_dim(int orbit_dim_in_levi, int dim_V_P);

}  // namespace tracegeo
