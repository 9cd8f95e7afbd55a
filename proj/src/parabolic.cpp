#include "tracegeo/parabolic.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "tracegeo/error.hpp"
#include "tracegeo/linalg.hpp"

namespace tracegeo {

namespace {

QMatrix rows_of(const RootSystem& rs, const RootSet& s) {
  const auto m = s.members();
  QMatrix a(m.size(), rs.ambient_dim());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < rs.ambient_dim(); ++c) a(r, c) = rs.roots()[m[r]][c];
  return a;
}

// Row basis of span(s).
QMatrix span_basis(const RootSystem& rs, const RootSet& s) {
  QMatrix a = rows_of(rs, s);
  const auto piv = rref(a);
  QMatrix b(piv.size(), rs.ambient_dim());
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t c = 0; c < rs.ambient_dim(); ++c) b(r, c) = a(r, c);
  return b;
}

// Row basis of span(l) ∩ span(m)^⊥, i.e. a^L_M when M ⊆ L.
QMatrix relative_complement(const RootSystem& rs, const RootSet& m, const RootSet& l) {
  const QMatrix bl = span_basis(rs, l);
  const QMatrix bm = span_basis(rs, m);
  if (bl.rows() == 0) return QMatrix(0, rs.ambient_dim());
  if (bm.rows() == 0) return bl;
  // x = c^T bl with (x, bm_j) = 0 for all j:  (bm bl^T) c = 0.
  const QMatrix gram = bm * bl.transpose();
  const QMatrix coeffs = kernel_basis(gram);
  return coeffs * bl;
}

std::vector<std::size_t> iota_n(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

bool is_closed(const RootSystem& rs, const RootSet& s) {
  const auto m = s.members();
  for (auto i : m)
    for (auto j : m) {
      const long k = rs.sum_index(i, j);
      if (k >= 0 && !s.contains(static_cast<std::size_t>(k))) return false;
    }
  return true;
}

bool is_parabolic(const RootSystem& rs, const RootSet& s) {
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (!s.contains(i) && !s.contains(rs.negation(i))) return false;
  return is_closed(rs, s);
}

int span_rank(const RootSystem& rs, const RootSet& s) {
  if (s.empty()) return 0;
  return static_cast<int>(rank(rows_of(rs, s)));
}

ParabolicSubset make_parabolic(const RootSystem& rs, RootSet members) {
  if (members.universe() != rs.size() || !is_parabolic(rs, members))
    throw DomainError("root subset is not parabolic");
  return {&rs, std::move(members)};
}

LeviDatum make_levi(const RootSystem& rs, RootSet levi_roots) {
  if (levi_roots.universe() != rs.size()) throw DomainError("root set from a different root system");
  for (auto i : levi_roots.members())
    if (!levi_roots.contains(rs.negation(i))) throw DomainError("Levi root set is not symmetric");
  // R ∩ span(levi) must equal levi: test membership against span^⊥.
  const QMatrix perp = kernel_basis(rows_of(rs, levi_roots));
  for (std::size_t i = 0; i < rs.size(); ++i) {
    bool in_span = true;
    for (std::size_t r = 0; r < perp.rows() && in_span; ++r) {
      Rational acc = 0;
      for (std::size_t c = 0; c < rs.ambient_dim(); ++c) acc += perp(r, c) * rs.roots()[i][c];
      if (acc != 0) in_span = false;
    }
    if (in_span != levi_roots.contains(i))
      throw DomainError("root set is not the Levi of any parabolic subset of the system");
  }
  const int a_dim = rs.rank() - span_rank(rs, levi_roots);
  return {&rs, std::move(levi_roots), a_dim};
}

ParabolicSubset standard_parabolic(const RootSystem& rs, const std::vector<std::size_t>& simple_subset) {
  return {&rs, rs.positive_set() | rs.span_of_simple(simple_subset)};
}

LeviDatum standard_levi(const RootSystem& rs, const std::vector<std::size_t>& simple_subset) {
  const RootSet levi = rs.span_of_simple(simple_subset);
  return {&rs, levi, rs.rank() - span_rank(rs, levi)};
}

LeviDatum minimal_levi(const RootSystem& rs) { return standard_levi(rs, {}); }

LeviDatum full_levi(const RootSystem& rs) {
  return standard_levi(rs, iota_n(static_cast<std::size_t>(rs.semisimple_rank())));
}

std::vector<ParabolicSubset> enumerate_parabolic_subsets(const RootSystem& rs) {
  if (rs.rank() > kMaxEnumerationRank)
    throw ResourceError("parabolic enumeration refused: rank " + std::to_string(rs.rank()) +
                        " exceeds guard " + std::to_string(kMaxEnumerationRank));
  const std::size_t r = static_cast<std::size_t>(rs.semisimple_rank());
  std::unordered_set<RootSet, RootSetHash> seen;
  std::deque<RootSet> queue;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<std::size_t> j;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (1u << k)) j.push_back(k);
    RootSet start = standard_parabolic(rs, j).members;
    if (seen.insert(start).second) queue.push_back(std::move(start));
    // Orbit of P_J under W via simple reflections.
    while (!queue.empty()) {
      const RootSet cur = std::move(queue.front());
      queue.pop_front();
      for (std::size_t k = 0; k < r; ++k) {
        const auto& perm = rs.reflection_permutation(k);
        RootSet img = rs.empty_set();
        for (auto i : cur.members()) img.insert(perm[i]);
        if (seen.insert(img).second) queue.push_back(std::move(img));
      }
    }
  }
  std::vector<ParabolicSubset> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back({&rs, s});
  std::sort(out.begin(), out.end(),
            [](const ParabolicSubset& a, const ParabolicSubset& b) { return lex_less(a.members, b.members); });
  return out;
}

LeviDatum levi_of(const ParabolicSubset& p) {
  const RootSystem& rs = *p.system;
  RootSet sym = rs.empty_set();
  for (auto i : p.members.members())
    if (p.members.contains(rs.negation(i))) sym.insert(i);
  const int a_dim = rs.rank() - span_rank(rs, sym);
  return {&rs, std::move(sym), a_dim};
}

int dim_unipotent_radical(const ParabolicSubset& p) {
  int n = 0;
  for (auto i : p.members.members())
    if (!p.members.contains(p.system->negation(i))) ++n;
  return n;
}

ParabolicSubset opposite(const ParabolicSubset& p) {
  RootSet neg = p.system->empty_set();
  for (auto i : p.members.members()) neg.insert(p.system->negation(i));
  return {p.system, std::move(neg)};
}

FSets f_sets(const RootSystem& rs, const LeviDatum& m) {
  // Validates realizability (throws DomainError otherwise).
  const LeviDatum checked = make_levi(rs, m.levi_roots);
  FSets out;
  for (auto& p : enumerate_parabolic_subsets(rs))
    if (checked.levi_roots.is_subset_of(p.members)) out.F.push_back(std::move(p));

  for (const auto& p : out.F) {
    LeviDatum l = levi_of(p);
    auto it = std::find_if(out.P_by_L.begin(), out.P_by_L.end(),
                           [&](const auto& entry) { return entry.first == l; });
    if (it == out.P_by_L.end()) {
      out.P_by_L.emplace_back(l, std::vector<ParabolicSubset>{p});
    } else {
      it->second.push_back(p);
    }
  }
  std::sort(out.P_by_L.begin(), out.P_by_L.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first.levi_roots, b.first.levi_roots); });
  for (const auto& entry : out.P_by_L) out.L.push_back(entry.first);
  return out;
}

int relative_a_dim(const RootSystem& rs, const LeviDatum& m, const LeviDatum& l) {
  if (!m.levi_roots.is_subset_of(l.levi_roots)) throw DomainError("M is not contained in L");
  return static_cast<int>(relative_complement(rs, m.levi_roots, l.levi_roots).rows());
}

bool d_nonvanishing(const RootSystem& rs, const LeviDatum& m, const LeviDatum& l1, const LeviDatum& l2) {
  if (!m.levi_roots.is_subset_of(l1.levi_roots) || !m.levi_roots.is_subset_of(l2.levi_roots))
    throw DomainError("d_nonvanishing requires M ⊆ L1 and M ⊆ L2");
  const QMatrix a1 = relative_complement(rs, m.levi_roots, l1.levi_roots);
  const QMatrix a2 = relative_complement(rs, m.levi_roots, l2.levi_roots);
  const std::size_t dim_g = relative_complement(rs, m.levi_roots, rs.all_roots()).rows();
  if (a1.rows() + a2.rows() != dim_g) return false;
  QMatrix both(a1.rows() + a2.rows(), rs.ambient_dim());
  for (std::size_t r = 0; r < a1.rows(); ++r)
    for (std::size_t c = 0; c < rs.ambient_dim(); ++c) both(r, c) = a1(r, c);
  for (std::size_t r = 0; r < a2.rows(); ++r)
    for (std::size_t c = 0; c < rs.ambient_dim(); ++c) both(a1.rows() + r, c) = a2(r, c);
  return rank(std::move(both)) == dim_g;
}

BigInt count_contributing_tuples(const RootSystem& rs, const LeviDatum& m, int s_size) {
  if (s_size < 1) throw DomainError("tuple length must be positive");
  if (s_size > kMaxTupleLength)
    throw ResourceError("tuple count refused: length " + std::to_string(s_size) + " exceeds guard " +
                        std::to_string(kMaxTupleLength));
  const std::size_t levis = f_sets(rs, m).L.size();
  const int d = rs.semisimple_rank() - span_rank(rs, m.levi_roots);
  // sum_{j <= d} C(s, j) (|L(M)| - 1)^j
  BigInt total = 0;
  BigInt binom = 1;
  for (int j = 0; j <= std::min(d, s_size); ++j) {
    BigInt others;
    mpz_ui_pow_ui(others.get_mpz_t(), static_cast<unsigned long>(levis - 1), static_cast<unsigned long>(j));
    total += binom * others;
    binom = binom * (s_size - j) / (j + 1);
  }
  return total;
}

}  // namespace tracegeo
