#include <doctest.h>

#include <set>

#include "tracegeo/error.hpp"
#include "tracegeo/root_datum.hpp"

using namespace tracegeo;

namespace {

std::vector<SimpleType> all_types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) {
    out.emplace_back(Series::A, r);
    out.emplace_back(Series::B, r);
    out.emplace_back(Series::C, r);
    if (r >= 2) out.emplace_back(Series::D, r);
  }
  for (int r : {6, 7, 8}) out.emplace_back(Series::E, r);
  out.emplace_back(Series::F, 4);
  out.emplace_back(Series::G, 2);
  return out;
}

// Number of roots from the classical closed forms.
std::size_t expected_root_count(const SimpleType& t) {
  const std::size_t l = static_cast<std::size_t>(t.rank());
  switch (t.series()) {
    case Series::A: return l * (l + 1);
    case Series::B:
    case Series::C: return 2 * l * l;
    case Series::D: return 2 * l * (l - 1);
    case Series::E: return l == 6 ? 72 : l == 7 ? 126 : 240;
    case Series::F: return 48;
    case Series::G: return 12;
  }
  return 0;
}

}  // namespace

TEST_CASE("small systems") {
  const RootSystem a2 = build_root_system({SimpleType(Series::A, 2)});
  CHECK(a2.size() == 6);
  CHECK(a2.simple_roots().size() == 2);
  CHECK(a2.ambient_dim() == 3);
  CHECK(positive_roots(a2).size() == 3);

  const RootSystem a1a1 = build_root_system({SimpleType(Series::A, 1), SimpleType(Series::A, 1)});
  CHECK(a1a1.size() == 4);
  CHECK(a1a1.simple_roots().size() == 2);

  CHECK(build_root_system({SimpleType(Series::B, 2)}).size() == 8);
  CHECK(positive_roots(build_root_system({SimpleType(Series::A, 1)})).size() == 1);
  CHECK(positive_roots(build_root_system({SimpleType(Series::G, 2)})).size() == 6);
}

TEST_CASE("torus adds coordinates, not roots") {
  const RootSystem g = build_root_system({SimpleType(Series::A, 1)}, 2);
  CHECK(g.size() == 2);
  CHECK(g.ambient_dim() == 4);
  CHECK(g.rank() == 3);
  CHECK(g.torus_rank() == 2);
  const RootSystem torus = build_root_system({}, 3);
  CHECK(torus.size() == 0);
  CHECK(torus.rank() == 3);
}

TEST_CASE("invalid series/rank combinations name the factor") {
  CHECK_THROWS_AS(SimpleType(Series::E, 5), DomainError);
  CHECK_THROWS_AS(SimpleType(Series::D, 1), DomainError);
  CHECK_THROWS_AS(SimpleType(Series::G, 3), DomainError);
  CHECK_THROWS_AS(SimpleType(Series::A, 0), DomainError);
  try {
    SimpleType(Series::F, 5);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("F5") != std::string::npos);
  }
}

TEST_CASE("root counts, negation closure and positive/negative partition") {
  for (const auto& t : all_types_up_to(8)) {
    CAPTURE(t.name());
    const RootSystem rs = build_root_system({t});
    CHECK(rs.size() == expected_root_count(t));
    std::set<RootVector> roots(rs.roots().begin(), rs.roots().end());
    CHECK(roots.size() == rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      RootVector neg = rs.roots()[i];
      for (auto& x : neg) x = -x;
      REQUIRE(rs.find(neg) >= 0);
      CHECK(static_cast<std::size_t>(rs.find(neg)) == rs.negation(i));
    }
    const auto pos = positive_roots(rs);
    CHECK(pos.size() * 2 == rs.size());
    std::set<RootVector> split(pos.begin(), pos.end());
    for (const auto& p : pos) {
      RootVector neg = p;
      for (auto& x : neg) x = -x;
      CHECK(split.count(neg) == 0);
      split.insert(neg);
    }
    CHECK(split == roots);
  }
}

TEST_CASE("simple coordinates are all of one sign and reconstruct the root") {
  for (const auto& t : all_types_up_to(5)) {
    CAPTURE(t.name());
    const RootSystem rs = build_root_system({t});
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const auto& c = rs.simple_coordinates(i);
      RootVector v(rs.ambient_dim(), 0);
      bool nonneg = true, nonpos = true;
      for (std::size_t k = 0; k < c.size(); ++k) {
        nonneg = nonneg && c[k] >= 0;
        nonpos = nonpos && c[k] <= 0;
        for (std::size_t d = 0; d < v.size(); ++d) v[d] += c[k] * rs.simple_roots()[k][d];
      }
      CHECK(v == rs.roots()[i]);
      CHECK((rs.is_positive(i) ? nonneg : nonpos));
    }
  }
}

TEST_CASE("simple reflections permute the roots") {
  const RootSystem rs = build_root_system({SimpleType(Series::B, 3)});
  for (std::size_t k = 0; k < rs.simple_roots().size(); ++k) {
    const auto& perm = rs.reflection_permutation(k);
    std::set<std::uint32_t> image(perm.begin(), perm.end());
    CHECK(image.size() == rs.size());
    CHECK(perm[rs.simple_index(k)] == rs.negation(rs.simple_index(k)));
  }
}

TEST_CASE("dual Coxeter numbers") {
  CHECK(dual_coxeter_number(SimpleType(Series::A, 3)) == 4);
  CHECK(dual_coxeter_number(SimpleType(Series::D, 4)) == 6);
  CHECK(dual_coxeter_number(SimpleType(Series::E, 8)) == 30);
  CHECK(dual_coxeter_number(SimpleType(Series::E, 6)) == 12);
  CHECK(dual_coxeter_number(SimpleType(Series::E, 7)) == 18);
  CHECK(dual_coxeter_number(SimpleType(Series::F, 4)) == 9);
  CHECK(dual_coxeter_number(SimpleType(Series::G, 2)) == 4);
  for (const auto& t : all_types_up_to(8)) {
    CAPTURE(t.name());
    CHECK(dual_coxeter_number(t) == dual_coxeter_table(t));
  }
}

TEST_CASE("classification of connected simple systems") {
  for (const auto& t : all_types_up_to(6)) {
    if (t.series() == Series::D && t.rank() < 4) continue;  // D2, D3 are A1xA1, A3
    if ((t.series() == Series::B || t.series() == Series::C) && t.rank() == 1) continue;
    if (t.series() == Series::C && t.rank() == 2) continue;  // C2 = B2
    CAPTURE(t.name());
    const RootSystem rs = build_root_system({t});
    CHECK(classify_connected(rs.simple_roots()) == t);
  }
  const RootSystem prod = build_root_system({SimpleType(Series::A, 2), SimpleType(Series::G, 2)});
  std::vector<std::size_t> all{0, 1, 2, 3};
  CHECK(dynkin_components(prod.simple_roots(), all).size() == 2);
}

TEST_CASE("positive roots from arbitrary simple systems") {
  // B2 given by a long and a short root.
  const auto pos = positive_roots_from_simple({{1, -1}, {0, 1}});
  CHECK(pos.size() == 4);
  CHECK_THROWS_AS(positive_roots_from_simple({{1, 0}, {1, 1}}), DomainError);
}
