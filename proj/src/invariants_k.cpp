#include "tracegeo/invariants_k.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>

#include "tracegeo/error.hpp"
#include "tracegeo/nilpotent.hpp"

namespace tracegeo {

namespace {

std::vector<std::size_t> bits_of(std::uint32_t mask, std::size_t r) {
  std::vector<std::size_t> j;
  for (std::size_t k = 0; k < r; ++k)
    if (mask & (1u << k)) j.push_back(k);
  return j;
}

// Distinct orbit dimensions available in one simple Levi factor.
std::vector<int> factor_orbit_dims(const SimpleType& t, bool levi_is_group) {
  std::set<int> dims;
  if (t.is_classical()) {
    for (const auto& o : list_orbits(t)) dims.insert(orbit_dim(o));
  } else {
    dims.insert(0);
    if (levi_is_group) dims.insert(min_orbit_dim(t));
  }
  return {dims.begin(), dims.end()};
}

// Multiplicity (nilradical contribution) of every positive relative root,
// keyed by simple-root coordinates.
std::map<std::vector<int>, int> relative_multiplicities(const RelativeDatum& rel) {
  const auto positives = positive_roots_from_simple(rel.simple_roots);
  const std::size_t r = rel.simple_roots.size();
  std::vector<std::vector<int>> cartan(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan[i][j] = cartan_integer(rel.simple_roots[i], rel.simple_roots[j]);

  auto height = [](const std::vector<int>& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
  };
  auto reflect = [&](const std::vector<int>& c, std::size_t j) {
    int pairing = 0;
    for (std::size_t i = 0; i < r; ++i) pairing += c[i] * cartan[i][j];
    std::vector<int> out = c;
    out[j] -= pairing;
    return out;
  };

  std::vector<std::vector<int>> by_height = positives;
  std::sort(by_height.begin(), by_height.end(),
            [&](const auto& a, const auto& b) { return height(a) < height(b); });
  std::map<std::vector<int>, int> mult;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    mult[c] = rel.nilradical_dims[i];
  }
  for (const auto& beta : by_height) {
    if (mult.count(beta)) continue;
    for (std::size_t j = 0; j < r; ++j) {
      const auto lower = reflect(beta, j);
      if (height(lower) < height(beta)) {
        mult[beta] = mult.at(lower);
        break;
      }
    }
  }
  for (const auto& beta : positives)
    for (std::size_t j = 0; j < r; ++j) {
      const auto img = reflect(beta, j);
      const auto it = mult.find(img);
      if (it != mult.end() && it->second != mult.at(beta))
        throw DomainError("relative nilradical dimensions are not invariant under the relative Weyl group");
    }
  return mult;
}

}  // namespace

void validate(const GroupSpec& g) {
  if (g.restriction_degree < 1) throw DomainError("restriction degree must be >= 1");
  if (g.torus_rank < 0) throw DomainError("torus rank must be >= 0");
  if (!g.relative) return;
  const auto& rel = *g.relative;
  if (rel.simple_roots.size() != rel.nilradical_dims.size())
    throw DomainError("relative datum: simple_roots and nilradical_dims differ in length");
  int abs_rank = 0;
  for (const auto& f : g.factors) abs_rank += f.rank();
  if (static_cast<int>(rel.simple_roots.size()) > abs_rank)
    throw DomainError("relative rank exceeds absolute rank");
  for (int d : rel.nilradical_dims)
    if (d <= 0) throw DomainError("relative nilradical dimensions must be positive");
  for (const auto& v : rel.simple_roots)
    if (!rel.simple_roots.empty() && v.size() != rel.simple_roots.front().size())
      throw DomainError("relative simple roots have different lengths");
}

int k_by_pairs(const GroupSpec& g) {
  validate(g);
  const RootSystem rs = g.absolute();
  const std::size_t r = static_cast<std::size_t>(rs.semisimple_rank());
  if (r == 0) throw DomainError("no nontrivial unipotent orbits: group has no simple factor");
  if (r > static_cast<std::size_t>(kMaxPairEnumerationRank))
    throw ResourceError("pair enumeration refused: semisimple rank " + std::to_string(r) + " exceeds guard " +
                        std::to_string(kMaxPairEnumerationRank));

  const std::uint32_t full = (1u << r) - 1;
  const int npos = static_cast<int>(rs.num_positive());
  int best = INT_MAX;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    const auto j = bits_of(mask, r);
    const RootSet levi = rs.span_of_simple(j);
    int levi_pos = 0;
    for (auto i : levi.members())
      if (rs.is_positive(i)) ++levi_pos;
    const int dim_v = npos - levi_pos;
    const bool levi_is_group = mask == full;

    std::vector<std::vector<int>> choices;
    for (const auto& comp : dynkin_components(rs.simple_roots(), j)) {
      std::vector<RootVector> vecs;
      for (auto k : comp) vecs.push_back(rs.simple_roots()[k]);
      choices.push_back(factor_orbit_dims(classify_connected(vecs), levi_is_group));
    }
    // Odometer over products of per-factor orbits; the levi is G exactly
    // when the all-trivial product is the excluded pair (G, {1}).
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
      int orbit = 0;
      for (std::size_t c = 0; c < choices.size(); ++c) orbit += choices[c][idx[c]];
      if (!(levi_is_group && orbit == 0)) best = std::min(best, induced_dim(orbit, dim_v));
      std::size_t c = 0;
      while (c < choices.size() && ++idx[c] == choices[c].size()) idx[c++] = 0;
      if (c == choices.size()) break;
    }
  }
  if (best % 2 != 0) throw NumericError("odd induced orbit dimension");
  return g.restriction_degree * best / 2;
}

int relative_dim_unipotent_radical(const RelativeDatum& rel, const std::vector<std::size_t>& kept) {
  const auto mult = relative_multiplicities(rel);
  std::vector<bool> in_levi(rel.simple_roots.size(), false);
  for (auto k : kept) in_levi.at(k) = true;
  int dim = 0;
  for (const auto& [beta, m] : mult) {
    bool inside = true;
    for (std::size_t k = 0; k < beta.size(); ++k)
      if (beta[k] != 0 && !in_levi[k]) inside = false;
    if (!inside) dim += m;
  }
  return dim;
}

int k_richardson(const GroupSpec& g, bool assume_richardson) {
  validate(g);
  int best = INT_MAX;
  if (g.relative) {
    const std::size_t r = g.relative->simple_roots.size();
    if (r == 0) throw DomainError("relative datum is anisotropic: no proper parabolic");
    for (std::uint32_t mask = 0; mask + 1 < (1u << r); ++mask)
      best = std::min(best, relative_dim_unipotent_radical(*g.relative, bits_of(mask, r)));
  } else {
    const RootSystem rs = g.absolute();
    const std::size_t r = static_cast<std::size_t>(rs.semisimple_rank());
    if (r == 0) throw DomainError("no nontrivial unipotent orbits: group has no simple factor");
    const int npos = static_cast<int>(rs.num_positive());
    // Maximal parabolics suffice: dim V_P only shrinks as J grows.
    for (std::size_t drop = 0; drop < r; ++drop) {
      std::vector<std::size_t> j;
      for (std::size_t k = 0; k < r; ++k)
        if (k != drop) j.push_back(k);
      const RootSet levi = rs.span_of_simple(j);
      int levi_pos = 0;
      for (auto i : levi.members())
        if (rs.is_positive(i)) ++levi_pos;
      best = std::min(best, npos - levi_pos);
    }
  }
  const int k = g.restriction_degree * best;
  if (assume_richardson && !g.relative) {
    const int pairs = k_by_pairs(g);
    if (pairs != k)
      throw DomainError("group assumed Richardson but min dim V_P = " + std::to_string(k) +
                        " differs from k = " + std::to_string(pairs));
  }
  return k;
}

int k_min_orbit(const GroupSpec& g) {
  validate(g);
  if (g.factors.empty()) throw DomainError("no nontrivial unipotent orbits: group has no simple factor");
  int best = INT_MAX;
  for (const auto& f : g.factors) best = std::min(best, min_orbit_dim(f) / 2);
  return g.restriction_degree * best;
}

KReport k_report(const GroupSpec& g) {
  KReport rep;
  GroupSpec absolute_only = g;
  absolute_only.relative.reset();
  rep.pairs = k_by_pairs(absolute_only);
  rep.richardson_absolute = k_richardson(absolute_only);
  rep.min_orbit = k_min_orbit(absolute_only);
  if (g.relative) {
    rep.richardson_relative = k_richardson(g);
    rep.relative_disagrees = *rep.richardson_relative != rep.min_orbit;
  }
  return rep;
}

}  // namespace tracegeo
