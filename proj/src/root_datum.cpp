#include "tracegeo/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "tracegeo/error.hpp"
#include "tracegeo/linalg.hpp"

namespace tracegeo {

char series_letter(Series s) { return "ABCDEFG"[static_cast<int>(s)]; }

SimpleType::SimpleType(Series series, int rank) : series_(series), rank_(rank) {
  bool ok = false;
  switch (series) {
    case Series::A:
    case Series::B:
    case Series::C: ok = rank >= 1; break;
    case Series::D: ok = rank >= 2; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok) throw DomainError("invalid simple type " + name());
}

std::string SimpleType::name() const { return std::string(1, series_letter(series_)) + std::to_string(rank_); }

int dot(const RootVector& a, const RootVector& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

int cartan_integer(const RootVector& a, const RootVector& b) {
  const int num = 2 * dot(a, b);
  const int den = dot(b, b);
  if (den == 0 || num % den != 0) throw DomainError("non-integral Cartan pairing");
  return num / den;
}

namespace {

RootVector unit(std::size_t dim, std::size_t i, int scale = 1) {
  RootVector v(dim, 0);
  v[i] = scale;
  return v;
}

RootVector e_minus(std::size_t dim, std::size_t i, std::size_t j) {
  RootVector v(dim, 0);
  v[i] = 1;
  v[j] = -1;
  return v;
}

// Bourbaki simple roots, E-types and F4 doubled.
std::vector<RootVector> bourbaki_simple_roots(const SimpleType& t) {
  const auto l = static_cast<std::size_t>(t.rank());
  std::vector<RootVector> s;
  switch (t.series()) {
    case Series::A:
      for (std::size_t i = 0; i < l; ++i) s.push_back(e_minus(l + 1, i, i + 1));
      break;
    case Series::B:
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(e_minus(l, i, i + 1));
      s.push_back(unit(l, l - 1));
      break;
    case Series::C:
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(e_minus(l, i, i + 1));
      s.push_back(unit(l, l - 1, 2));
      break;
    case Series::D: {
      for (std::size_t i = 0; i + 1 < l; ++i) s.push_back(e_minus(l, i, i + 1));
      RootVector last(l, 0);
      last[l - 2] = 1;
      last[l - 1] = 1;
      s.push_back(last);
      break;
    }
    case Series::G:
      s.push_back({1, -1, 0});
      s.push_back({-2, 1, 1});
      break;
    case Series::F:
      s.push_back({0, 2, -2, 0});
      s.push_back({0, 0, 2, -2});
      s.push_back({0, 0, 0, 2});
      s.push_back({1, -1, -1, -1});
      break;
    case Series::E: {
      std::vector<RootVector> e8 = {
          {1, -1, -1, -1, -1, -1, -1, 1},  // (e1 + e8 - e2 - ... - e7) / 2
          {2, 2, 0, 0, 0, 0, 0, 0},        {-2, 2, 0, 0, 0, 0, 0, 0},
          {0, -2, 2, 0, 0, 0, 0, 0},       {0, 0, -2, 2, 0, 0, 0, 0},
          {0, 0, 0, -2, 2, 0, 0, 0},       {0, 0, 0, 0, -2, 2, 0, 0},
          {0, 0, 0, 0, 0, -2, 2, 0},
      };
      s.assign(e8.begin(), e8.begin() + static_cast<std::ptrdiff_t>(l));
      break;
    }
  }
  return s;
}

std::vector<std::vector<int>> cartan_matrix(const std::vector<RootVector>& simple) {
  const std::size_t r = simple.size();
  std::vector<std::vector<int>> a(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i][j] = cartan_integer(simple[i], simple[j]);
  return a;
}

}  // namespace

std::vector<std::vector<int>> positive_roots_from_simple(const std::vector<RootVector>& simple) {
  const std::size_t r = simple.size();
  if (r == 0) return {};
  for (const auto& v : simple)
    if (dot(v, v) == 0) throw DomainError("zero vector in simple system");
  if (rank(simple) != r) throw DomainError("simple roots are linearly dependent");
  const auto a = cartan_matrix(simple);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && (a[i][j] > 0 || a[i][j] * a[j][i] > 3))
        throw DomainError("vectors do not form a crystallographic simple system");

  constexpr std::size_t kMaxRoots = 1u << 16;
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      // <beta, alpha_j^vee> = sum_i c_i a_ij
      int pairing = 0;
      for (std::size_t i = 0; i < r; ++i) pairing += c[i] * a[i][j];
      std::vector<int> next = c;
      next[j] -= pairing;
      if (std::any_of(next.begin(), next.end(), [](int x) { return x < 0; })) continue;
      if (std::all_of(next.begin(), next.end(), [](int x) { return x == 0; })) continue;
      if (seen.insert(next).second) {
        if (seen.size() > kMaxRoots) throw DomainError("simple system generates an infinite root system");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

RootSystem build_root_system(const std::vector<SimpleType>& factors, int torus_rank) {
  if (torus_rank < 0) throw DomainError("negative torus rank");
  RootSystem rs;
  rs.factors_ = factors;
  rs.torus_rank_ = torus_rank;

  std::vector<std::vector<RootVector>> blocks;
  std::size_t dim = 0;
  for (const auto& f : factors) {
    blocks.push_back(bourbaki_simple_roots(f));
    dim += blocks.back().front().size();
  }
  rs.ambient_dim_ = dim + static_cast<std::size_t>(torus_rank);

  std::size_t offset = 0;
  for (std::size_t f = 0; f < blocks.size(); ++f) {
    for (const auto& v : blocks[f]) {
      RootVector w(rs.ambient_dim_, 0);
      std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(offset));
      rs.simple_roots_.push_back(std::move(w));
      rs.factor_of_simple_.push_back(f);
    }
    offset += blocks[f].front().size();
  }

  const std::size_t r = rs.simple_roots_.size();
  // Factors are mutually orthogonal, so the product closure is the union of
  // the per-factor closures; computing it globally is equivalent.
  auto coords = positive_roots_from_simple(rs.simple_roots_);
  std::sort(coords.begin(), coords.end(), [](const auto& x, const auto& y) {
    const int hx = std::accumulate(x.begin(), x.end(), 0);
    const int hy = std::accumulate(y.begin(), y.end(), 0);
    if (hx != hy) return hx < hy;
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
  });
  const std::size_t npos = coords.size();
  rs.coords_.resize(2 * npos);
  rs.roots_.resize(2 * npos);
  for (std::size_t i = 0; i < npos; ++i) {
    RootVector v(rs.ambient_dim_, 0);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t d = 0; d < rs.ambient_dim_; ++d) v[d] += coords[i][k] * rs.simple_roots_[k][d];
    RootVector neg = v;
    for (auto& x : neg) x = -x;
    std::vector<int> negc = coords[i];
    for (auto& x : negc) x = -x;
    rs.roots_[i] = std::move(v);
    rs.roots_[i + npos] = std::move(neg);
    rs.coords_[i] = coords[i];
    rs.coords_[i + npos] = std::move(negc);
  }
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.lookup_.emplace(rs.roots_[i], i);

  rs.simple_index_.resize(r);
  for (std::size_t k = 0; k < r; ++k) rs.simple_index_[k] = static_cast<std::size_t>(rs.find(rs.simple_roots_[k]));

  const std::size_t n = rs.roots_.size();
  rs.sums_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RootVector s = rs.roots_[i];
      for (std::size_t d = 0; d < s.size(); ++d) s[d] += rs.roots_[j][d];
      rs.sums_[i * n + j] = rs.find(s);
    }

  rs.reflections_.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto& alpha = rs.simple_roots_[k];
    auto& perm = rs.reflections_[k];
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int c = cartan_integer(rs.roots_[i], alpha);
      RootVector w = rs.roots_[i];
      for (std::size_t d = 0; d < w.size(); ++d) w[d] -= c * alpha[d];
      perm[i] = static_cast<std::uint32_t>(rs.find(w));
    }
  }
  return rs;
}

int RootSystem::height(std::size_t i) const {
  return std::accumulate(coords_[i].begin(), coords_[i].end(), 0);
}

long RootSystem::find(const RootVector& v) const {
  const auto it = lookup_.find(v);
  return it == lookup_.end() ? -1 : static_cast<long>(it->second);
}

RootSet RootSystem::all_roots() const {
  RootSet s(size());
  for (std::size_t i = 0; i < size(); ++i) s.insert(i);
  return s;
}

RootSet RootSystem::positive_set() const {
  RootSet s(size());
  for (std::size_t i = 0; i < num_positive(); ++i) s.insert(i);
  return s;
}

RootSet RootSystem::span_of_simple(const std::vector<std::size_t>& simple_subset) const {
  std::vector<bool> allowed(simple_roots_.size(), false);
  for (auto k : simple_subset) allowed[k] = true;
  RootSet s(size());
  for (std::size_t i = 0; i < size(); ++i) {
    bool inside = true;
    for (std::size_t k = 0; k < coords_[i].size() && inside; ++k)
      if (coords_[i][k] != 0 && !allowed[k]) inside = false;
    if (inside) s.insert(i);
  }
  return s;
}

std::vector<RootVector> positive_roots(const RootSystem& rs) {
  return {rs.roots().begin(), rs.roots().begin() + static_cast<std::ptrdiff_t>(rs.num_positive())};
}

std::vector<std::vector<std::size_t>> dynkin_components(const std::vector<RootVector>& simple,
                                                        const std::vector<std::size_t>& subset) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> done(subset.size(), false);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack = {s};
    done[s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      comp.push_back(subset[u]);
      for (std::size_t v = 0; v < subset.size(); ++v) {
        if (!done[v] && dot(simple[subset[u]], simple[subset[v]]) != 0) {
          done[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

SimpleType classify_connected(const std::vector<RootVector>& simple) {
  const std::size_t n = simple.size();
  if (n == 0) throw DomainError("empty simple system");
  if (n == 1) return {Series::A, 1};

  std::vector<std::vector<std::size_t>> adj(n);
  int max_bond = 1;
  std::size_t bond_u = 0, bond_v = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dot(simple[i], simple[j]) == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      const int bond = cartan_integer(simple[i], simple[j]) * cartan_integer(simple[j], simple[i]);
      if (bond > max_bond) {
        max_bond = bond;
        bond_u = i;
        bond_v = j;
      }
    }
  const int r = static_cast<int>(n);
  if (max_bond == 3) return {Series::G, 2};
  if (max_bond == 2) {
    if (n == 2) return {Series::B, 2};
    const bool u_end = adj[bond_u].size() == 1;
    const bool v_end = adj[bond_v].size() == 1;
    if (!u_end && !v_end) return {Series::F, 4};
    const std::size_t end = u_end ? bond_u : bond_v;
    const std::size_t other = u_end ? bond_v : bond_u;
    const bool end_is_short = dot(simple[end], simple[end]) < dot(simple[other], simple[other]);
    return {end_is_short ? Series::B : Series::C, r};
  }
  std::size_t branch = n;
  for (std::size_t i = 0; i < n; ++i)
    if (adj[i].size() == 3) branch = i;
  if (branch == n) return {Series::A, r};

  std::vector<int> arms;
  for (auto start : adj[branch]) {
    int len = 0;
    std::size_t prev = branch, cur = start;
    for (;;) {
      ++len;
      std::size_t next = n;
      for (auto w : adj[cur])
        if (w != prev) next = w;
      if (next == n) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Series::D, r};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Series::E, r};
  throw DomainError("unrecognized Dynkin diagram");
}

int dual_coxeter_number(const SimpleType& t) {
  const RootSystem rs = build_root_system({t}, 0);
  std::vector<std::size_t> all(static_cast<std::size_t>(rs.semisimple_rank()));
  std::iota(all.begin(), all.end(), 0);
  std::set<int> values;
  for (const auto& comp : dynkin_components(rs.simple_roots(), all)) {
    // Highest root of this component: the positive root of maximal height
    // supported on it.
    const RootSet in_comp = rs.span_of_simple(comp);
    std::size_t best = 0;
    int best_height = -1;
    for (std::size_t i = 0; i < rs.num_positive(); ++i)
      if (in_comp.contains(i) && rs.height(i) > best_height) {
        best = i;
        best_height = rs.height(i);
      }
    const RootVector& theta = rs.roots()[best];
    const int theta_sq = dot(theta, theta);
    // theta^vee = sum_k c_k (|alpha_k|^2 / |theta|^2) alpha_k^vee
    int sum = 0;
    for (auto k : comp) {
      const int num = rs.simple_coordinates(best)[k] * dot(rs.simple_roots()[k], rs.simple_roots()[k]);
      if (num % theta_sq != 0) throw NumericError("non-integral coroot coefficient");
      sum += num / theta_sq;
    }
    values.insert(1 + sum);
  }
  if (values.size() != 1) throw DomainError("components of " + t.name() + " disagree on h^vee");
  return *values.begin();
}

int dual_coxeter_table(const SimpleType& t) {
  const int l = t.rank();
  switch (t.series()) {
    case Series::A: return l + 1;
    case Series::B: return l == 1 ? 2 : 2 * l - 1;
    case Series::C: return l + 1;
    case Series::D: return l == 2 ? 2 : 2 * l - 2;
    case Series::E: return l == 6 ? 12 : (l == 7 ? 18 : 30);
    case Series::F: return 9;
    case Series::G: return 4;
  }
  return 0;
}

}  // namespace tracegeo
