#pragma once

#include <cstdint>
#include <string>
#include <map>
#include <vector>

#include "tracegeo/root_set.hpp"

namespace tracegeo {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);

// One simple (irreducible) factor, e.g. A2 or E8. Rank bounds are checked on
// construction: A,B,C >= 1, D >= 2, E in {6,7,8}, F = 4, G = 2.
class SimpleType {
 public:
  SimpleType(Series series, int rank);

  Series series() const noexcept { return series_; }
  int rank() const noexcept { return rank_; }
  bool is_classical() const noexcept { return series_ <= Series::D; }
  std::string name() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;

 private:
  Series series_;
  int rank_;
};

using RootVector = std::vector<int>;

int dot(const RootVector& a, const RootVector& b);

// A reduced crystallographic root system realized in an integer lattice,
// with a fixed simple system. Products are block-diagonal; a central torus
// of rank `torus_rank` adds trailing zero coordinates and no roots.
//
// Root order is canonical: positive roots by (height, simple-root
// coordinates), then the negative roots in the same order, so that root
// i < npos has negative i + npos.
//
// Realizations follow Bourbaki. Types with half-integral roots (E, F4) are
// scaled by 2, which leaves Cartan integers and orthogonality unchanged.
class RootSystem {
 public:
  RootSystem() = default;

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  int semisimple_rank() const noexcept { return static_cast<int>(simple_roots_.size()); }
  int torus_rank() const noexcept { return torus_rank_; }
  // Dimension of the span of the roots plus the central torus rank.
  int rank() const noexcept { return semisimple_rank() + torus_rank_; }

  const std::vector<RootVector>& roots() const noexcept { return roots_; }
  const std::vector<RootVector>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<SimpleType>& factors() const noexcept { return factors_; }

  std::size_t size() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }
  bool is_positive(std::size_t i) const noexcept { return i < num_positive(); }
  std::size_t negation(std::size_t i) const noexcept {
    return i < num_positive() ? i + num_positive() : i - num_positive();
  }

  // Coordinates of root i in the simple-root basis.
  const std::vector<int>& simple_coordinates(std::size_t i) const { return coords_[i]; }
  int height(std::size_t i) const;

  // Index of v among the roots, or -1.
  long find(const RootVector& v) const;

  // Index of the sum of roots i and j when it is a root, or -1.
  long sum_index(std::size_t i, std::size_t j) const { return sums_[i * roots_.size() + j]; }

  // Root permutation induced by the simple reflection s_k.
  const std::vector<std::uint32_t>& reflection_permutation(std::size_t k) const {
    return reflections_[k];
  }

  RootSet empty_set() const { return RootSet(roots_.size()); }
  RootSet all_roots() const;
  RootSet positive_set() const;

  // Roots whose simple coordinates vanish outside `simple_subset`.
  RootSet span_of_simple(const std::vector<std::size_t>& simple_subset) const;

  // Index of simple root k in roots().
  std::size_t simple_index(std::size_t k) const { return simple_index_[k]; }

  // Which factor each simple root belongs to.
  std::size_t factor_of_simple(std::size_t k) const { return factor_of_simple_[k]; }

  friend RootSystem build_root_system(const std::vector<SimpleType>& factors, int torus_rank);

 private:
  std::size_t ambient_dim_ = 0;
  int torus_rank_ = 0;
  std::vector<SimpleType> factors_;
  std::vector<RootVector> simple_roots_;
  std::vector<RootVector> roots_;
  std::vector<std::vector<int>> coords_;
  std::vector<long> sums_;
  std::vector<std::vector<std::uint32_t>> reflections_;
  std::vector<std::size_t> simple_index_;
  std::vector<std::size_t> factor_of_simple_;
  std::map<RootVector, std::size_t> lookup_;
};

RootSystem build_root_system(const std::vector<SimpleType>& factors, int torus_rank = 0);

// All roots generated from a simple system by simple reflections, as
// simple-root coordinate vectors (positive ones only). Throws DomainError if
// the vectors are not a crystallographic simple system.
std::vector<std::vector<int>> positive_roots_from_simple(const std::vector<RootVector>& simple);

// Positive roots of rs in canonical order.
std::vector<RootVector> positive_roots(const RootSystem& rs);

// Cartan integer <a, b^vee> = 2 (a, b) / (b, b).
int cartan_integer(const RootVector& a, const RootVector& b);

// Dual Coxeter number: 1 + the coefficient sum of the highest root's coroot
// in the simple coroot basis (equivalently the highest short root of the
// dual system). For reducible D2 the common value over both components.
int dual_coxeter_number(const SimpleType& t);

// Closed-form dual Coxeter numbers (B1 and D2 are handled as A1, A1xA1).
int dual_coxeter_table(const SimpleType& t);

// Identifies the simple type of a connected simple system given by
// integer vectors (used to type Levi factors).
SimpleType classify_connected(const std::vector<RootVector>& simple);

// Splits a set of simple roots into Dynkin-connected components.
std::vector<std::vector<std::size_t>> dynkin_components(const std::vector<RootVector>& simple,
                                                        const std::vector<std::size_t>& subset);

}  // namespace tracegeo
