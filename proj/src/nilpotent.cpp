#include "tracegeo/nilpotent.hpp"

#include <algorithm>
#include <map>

#include "tracegeo/error.hpp"

namespace tracegeo {

namespace {

struct Classical {
  char family;  // 'A' (gl/sl), 'B', 'C', 'D'
  int matrix_size;
  int rank;
};

Classical classical_of(const AlgebraType& t) {
  if (const auto* gl = std::get_if<GlType>(&t)) {
    if (gl->n < 1) throw DomainError("gl(n) needs n >= 1");
    return {'A', gl->n, gl->n};
  }
  const auto& s = std::get<SimpleType>(t);
  const int l = s.rank();
  switch (s.series()) {
    case Series::A: return {'A', l + 1, l};
    case Series::B: return {'B', 2 * l + 1, l};
    case Series::C: return {'C', 2 * l, l};
    case Series::D: return {'D', 2 * l, l};
    default: break;
  }
  throw DomainError("no partition classification for exceptional type " + s.name() +
                    "; use min_orbit_dim");
}

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  return m;
}

int sum_squares(const Partition& p) {
  int s = 0;
  for (int x : p) s += x * x;
  return s;
}

int odd_parts(const Partition& p) {
  return static_cast<int>(std::count_if(p.begin(), p.end(), [](int x) { return x % 2 != 0; }));
}

}  // namespace

std::string algebra_name(const AlgebraType& t) {
  if (const auto* gl = std::get_if<GlType>(&t)) return "gl(" + std::to_string(gl->n) + ")";
  return std::get<SimpleType>(t).name();
}

std::string OrbitLabel::label() const {
  switch (kind) {
    case OrbitKind::Trivial: return "trivial";
    case OrbitKind::Minimal: return "minimal";
    case OrbitKind::Partition: break;
  }
  std::string s = "(";
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(partition[i]);
  }
  return s + ")";
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int i = 1; i <= p.front(); ++i)
    t.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [i](int x) { return x >= i; })));
  return t;
}

bool is_valid_partition(const AlgebraType& t, const Partition& p) {
  const Classical c = classical_of(t);
  int total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1 || (i > 0 && p[i] > p[i - 1])) return false;
    total += p[i];
  }
  if (total != c.matrix_size) return false;
  const auto mult = multiplicities(p);
  for (const auto& [part, m] : mult) {
    if ((c.family == 'B' || c.family == 'D') && part % 2 == 0 && m % 2 != 0) return false;
    if (c.family == 'C' && part % 2 != 0 && m % 2 != 0) return false;
  }
  return true;
}

std::vector<OrbitLabel> list_orbits(const AlgebraType& t) {
  const Classical c = classical_of(t);
  if (c.rank > kMaxOrbitListRank)
    throw ResourceError("orbit listing refused: rank " + std::to_string(c.rank) + " exceeds guard " +
                        std::to_string(kMaxOrbitListRank));
  std::vector<Partition> all;
  Partition cur;
  partitions_rec(c.matrix_size, c.matrix_size, cur, all);
  std::vector<OrbitLabel> out;
  for (auto& p : all) {
    if (!is_valid_partition(t, p)) continue;
    OrbitLabel l;
    l.kind = OrbitKind::Partition;
    l.type = t;
    l.very_even = c.family == 'D' && std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
    l.partition = std::move(p);
    out.push_back(std::move(l));
  }
  return out;
}

int orbit_dim(const OrbitLabel& label) {
  if (label.kind == OrbitKind::Trivial) return 0;
  if (label.kind == OrbitKind::Minimal) {
    if (const auto* gl = std::get_if<GlType>(&label.type)) {
      if (gl->n < 2) throw DomainError("gl(1) has no nontrivial unipotent orbit");
      return 2 * gl->n - 2;
    }
    return min_orbit_dim(std::get<SimpleType>(label.type));
  }
  if (!is_valid_partition(label.type, label.partition))
    throw DomainError("partition " + label.label() + " is not valid for " + algebra_name(label.type));
  const Classical c = classical_of(label.type);
  const int m = c.matrix_size;
  const int sq = sum_squares(transpose(label.partition));
  const int odd = odd_parts(label.partition);
  switch (c.family) {
    case 'A': return m * m - sq;
    case 'B':
    case 'D': return (m * m - m) / 2 - (sq - odd) / 2;
    default: return 2 * c.rank * c.rank + c.rank - (sq + odd) / 2;
  }
}

int min_orbit_dim(const SimpleType& t) { return 2 * (dual_coxeter_number(t) - 1); }

int induced_dim(int orbit_dim_in_levi, int dim_V_P) {
  if (orbit_dim_in_levi < 0 || dim_V_P < 0) throw DomainError("dimensions must be nonnegative");
  return orbit_dim_in_levi + 2 * dim_V_P;
}

}  // namespace tracegeo
