#include "tracegeo/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "tracegeo/arithmetic.hpp"
#include "tracegeo/error.hpp"
#include "tracegeo/error_budget.hpp"
#include "tracegeo/invariants_k.hpp"
#include "tracegeo/local_data.hpp"
#include "tracegeo/mellin_fp.hpp"
#include "tracegeo/nilpotent.hpp"
#include "tracegeo/oracles.hpp"
#include "tracegeo/parabolic.hpp"

namespace tracegeo {

namespace {

using Clock = std::chrono::steady_clock;

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

GroupSpec spec_of(std::vector<SimpleType> factors, int degree = 1) {
  GroupSpec g;
  g.factors = std::move(factors);
  g.restriction_degree = degree;
  return g;
}

std::vector<SimpleType> simple_types_up_to_rank(int max_rank) {
  std::vector<SimpleType> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Series::A, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Series::B, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Series::C, r);
  for (int r = 3; r <= max_rank; ++r) out.emplace_back(Series::D, r);
  for (int r : {6, 7, 8})
    if (r <= max_rank) out.emplace_back(Series::E, r);
  out.emplace_back(Series::F, 4);
  out.emplace_back(Series::G, 2);
  return out;
}

void check_sl_k(CheckResult& res, const ReproduceOptions& opts) {
  res.name = "k(SL(n)) = n-1, n = 2..8, three methods";
  res.expected = "1,2,3,4,5,6,7 by pairs, richardson and min-orbit; < 1 s";
  std::vector<std::string> got;
  const auto start = Clock::now();
  for (int n = 2; n <= 8; ++n) {
    const GroupSpec g = spec_of({SimpleType(Series::A, n - 1)});
    int pairs = k_by_pairs(g);
    const int rich = k_richardson(g);
    const int minorb = k_min_orbit(g);
    if (opts.inject_k_sl4_fault && n == 4) pairs = 4;
    got.push_back(std::to_string(pairs) + "/" + std::to_string(rich) + "/" + std::to_string(minorb));
    for (int v : {pairs, rich, minorb})
      if (v != n - 1) {
        res.failures.push_back("SL(" + std::to_string(n) + "): got " + got.back() + ", want " + std::to_string(n - 1));
        break;
      }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 1.0) res.failures.push_back("took " + fmt(secs) + " s");
  res.actual = join(got);
}

void check_so_k(CheckResult& res) {
  res.name = "k = n-2 for D_{(n+1)/2}, n in {5,7,9}; relative SO(3,1) gives 2";
  res.expected = "3,5,7; 2";
  std::vector<std::string> got;
  for (int n : {5, 7, 9}) {
    const GroupSpec g = spec_of({SimpleType(Series::D, (n + 1) / 2)});
    const int pairs = k_by_pairs(g);
    const int minorb = k_min_orbit(g);
    got.push_back(std::to_string(pairs) + "/" + std::to_string(minorb));
    if (pairs != n - 2 || minorb != n - 2)
      res.failures.push_back("D" + std::to_string((n + 1) / 2) + ": got " + got.back());
  }
  // SO(3,1): absolute type D2 = A1xA1, one relative simple root whose
  // unipotent radical is 2-dimensional.
  GroupSpec so31 = spec_of({SimpleType(Series::A, 1), SimpleType(Series::A, 1)});
  so31.relative = RelativeDatum{{{1}}, {2}};
  const int rel = k_richardson(so31);
  if (rel != 2) res.failures.push_back("SO(3,1) relative: got " + std::to_string(rel));
  res.actual = join(got) + "; " + std::to_string(rel);
}

void check_restriction(CheckResult& res) {
  res.name = "k(A1 with restriction degree n) = n, n = 1..5";
  res.expected = "1,2,3,4,5 by every method";
  std::vector<std::string> got;
  for (int n = 1; n <= 5; ++n) {
    const GroupSpec g = spec_of({SimpleType(Series::A, 1)}, n);
    const int a = k_by_pairs(g), b = k_richardson(g), c = k_min_orbit(g);
    got.push_back(std::to_string(a));
    if (a != n || b != n || c != n)
      res.failures.push_back("degree " + std::to_string(n) + ": " + std::to_string(a) + "/" + std::to_string(b) +
                             "/" + std::to_string(c));
  }
  res.actual = join(got);
}

void check_pairs_vs_dual_coxeter(CheckResult& res) {
  res.name = "pair enumeration k = h^vee - 1 for every simple type of rank <= 8";
  const auto types = simple_types_up_to_rank(8);
  res.expected = "h^vee - 1 on " + std::to_string(types.size()) + " types; < 10 s";
  const auto start = Clock::now();
  int agree = 0;
  for (const auto& t : types) {
    const int k = k_by_pairs(spec_of({t}));
    const int hv = dual_coxeter_table(t);
    if (k == hv - 1 && dual_coxeter_number(t) == hv)
      ++agree;
    else
      res.failures.push_back(t.name() + ": k = " + std::to_string(k) + ", h^vee = " + std::to_string(hv) +
                             ", computed h^vee = " + std::to_string(dual_coxeter_number(t)));
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 10.0) res.failures.push_back("took " + fmt(secs) + " s");
  res.actual = std::to_string(agree) + "/" + std::to_string(types.size()) + " agree in " + fmt(secs) + " s";
}

std::vector<std::size_t> members_of(const ParabolicSubset& p) { return p.members.members(); }

void check_f_decomposition(CheckResult& res) {
  res.name = "F(M) is the disjoint union of P(L) over L in L(M)";
  res.expected = "partition holds for every Levi of A1, A1xA1, A2, A3, B2; |F(M0)| = 13 for A2";
  const std::vector<std::pair<std::string, std::vector<SimpleType>>> systems = {
      {"A1", {SimpleType(Series::A, 1)}},
      {"A1xA1", {SimpleType(Series::A, 1), SimpleType(Series::A, 1)}},
      {"A2", {SimpleType(Series::A, 2)}},
      {"A3", {SimpleType(Series::A, 3)}},
      {"B2", {SimpleType(Series::B, 2)}},
  };
  std::vector<std::string> got;
  std::size_t a2_count = 0, a2_brute = 0;
  for (const auto& [name, factors] : systems) {
    const RootSystem rs = build_root_system(factors);
    const auto all = enumerate_parabolic_subsets(rs);
    const auto brute = oracle::closed_parabolic_subsets(rs.roots());
    std::vector<std::vector<std::size_t>> listed;
    for (const auto& p : all) listed.push_back(members_of(p));
    std::vector<std::vector<std::size_t>> sorted = listed;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != brute) res.failures.push_back(name + ": enumeration differs from brute force");

    std::vector<LeviDatum> levis;
    for (const auto& p : all) {
      const LeviDatum l = levi_of(p);
      if (std::find(levis.begin(), levis.end(), l) == levis.end()) levis.push_back(l);
    }
    for (const auto& m : levis) {
      const FSets fs = f_sets(rs, m);
      // Coverage: F(M) must be exactly the brute-force sets containing M.
      std::vector<std::vector<std::size_t>> expect_f;
      for (const auto& b : brute) {
        bool contains = true;
        for (auto i : m.levi_roots.members())
          if (!std::binary_search(b.begin(), b.end(), i)) contains = false;
        if (contains) expect_f.push_back(b);
      }
      std::vector<std::vector<std::size_t>> f_members, union_members;
      for (const auto& p : fs.F) f_members.push_back(members_of(p));
      std::sort(f_members.begin(), f_members.end());
      std::size_t total = 0;
      for (const auto& [l, ps] : fs.P_by_L) {
        for (const auto& p : ps) {
          if (!(levi_of(p) == l)) res.failures.push_back(name + ": parabolic filed under the wrong Levi");
          union_members.push_back(members_of(p));
        }
        total += ps.size();
      }
      std::sort(union_members.begin(), union_members.end());
      const bool disjoint = std::adjacent_find(union_members.begin(), union_members.end()) == union_members.end();
      if (f_members != expect_f) res.failures.push_back(name + ": F(M) differs from brute force");
      if (!disjoint || total != fs.F.size() || union_members != f_members)
        res.failures.push_back(name + ": P(L) groups do not partition F(M)");
      if (fs.L.size() != fs.P_by_L.size()) res.failures.push_back(name + ": L(M) and grouping differ in size");
    }
    got.push_back(name + ":" + std::to_string(all.size()) + " parabolics/" + std::to_string(levis.size()) + " Levis");
    if (name == "A2") {
      a2_count = f_sets(rs, minimal_levi(rs)).F.size();
      a2_brute = brute.size();
    }
  }
  if (a2_count != 13 || a2_brute != 13)
    res.failures.push_back("A2: |F(M0)| = " + std::to_string(a2_count) + ", brute force " + std::to_string(a2_brute));
  res.actual = join(got) + "; |F(M0)| A2 = " + std::to_string(a2_count) + " (brute force " +
               std::to_string(a2_brute) + ")";
}

void check_orbit_dims(CheckResult& res) {
  res.name = "nilpotent orbit dimensions: gl(n) minimal and regular, B/C/D minima";
  res.expected = "gl(n): 2n-2 and n^2-n for n <= 8; so/sp minima = 2(h^vee - 1) for rank <= 8";
  int cases = 0;
  for (int n = 2; n <= 8; ++n) {
    int brute_min = n * n, brute_max = 0;
    for (const auto& p : oracle::partitions(n)) {
      const int d = oracle::gl_orbit_dim_by_diagram(p);
      if (d > 0) brute_min = std::min(brute_min, d);
      brute_max = std::max(brute_max, d);
    }
    int lib_min = n * n, lib_max = 0;
    for (const auto& o : list_orbits(GlType{n})) {
      const int d = orbit_dim(o);
      if (d > 0) lib_min = std::min(lib_min, d);
      lib_max = std::max(lib_max, d);
    }
    if (brute_min != 2 * n - 2 || lib_min != 2 * n - 2 || brute_max != n * n - n || lib_max != n * n - n)
      res.failures.push_back("gl(" + std::to_string(n) + "): min " + std::to_string(lib_min) + "/" +
                             std::to_string(brute_min) + ", regular " + std::to_string(lib_max) + "/" +
                             std::to_string(brute_max));
    ++cases;
  }
  for (int r = 1; r <= 8; ++r) {
    for (Series s : {Series::B, Series::C, Series::D}) {
      if (s == Series::D && r < 2) continue;
      const SimpleType t(s, r);
      const bool orthogonal = s != Series::C;
      const int m = s == Series::B ? 2 * r + 1 : 2 * r;
      int brute_min = m * m;
      for (const auto& p : oracle::partitions(m)) {
        if (!oracle::classical_partition_ok(orthogonal, p)) continue;
        const int d = oracle::classical_orbit_dim(orthogonal, p);
        if (d > 0) brute_min = std::min(brute_min, d);
      }
      int lib_min = m * m;
      for (const auto& o : list_orbits(t)) {
        const int d = orbit_dim(o);
        if (d > 0) lib_min = std::min(lib_min, d);
      }
      const int want = 2 * (dual_coxeter_table(t) - 1);
      if (brute_min != want || lib_min != want || min_orbit_dim(t) != want)
        res.failures.push_back(t.name() + ": brute " + std::to_string(brute_min) + ", listed " +
                               std::to_string(lib_min) + ", want " + std::to_string(want));
      ++cases;
    }
  }
  res.actual = std::to_string(cases - static_cast<int>(res.failures.size())) + "/" + std::to_string(cases) +
               " algebras agree";
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  int p = 0;
  while (p == 0) p = num(rng);
  Rational q(p, den(rng));
  q.canonicalize();
  return q;
}

void check_discriminant(CheckResult& res) {
  res.name = "Weyl discriminant: division route = product formula = restricted determinant";
  res.expected = "exact agreement on 100 diagonal matrices in GL(2..4); D(1) = 1";
  std::mt19937_64 rng(20240611);
  int agree = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    // Draw from a small pool so that repeated eigenvalues occur.
    std::vector<Rational> pool;
    for (int i = 0; i < 3; ++i) pool.push_back(random_rational(rng));
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<Rational> diag(n);
    for (auto& x : diag) x = trial % 2 == 0 ? pool[pick(rng)] : random_rational(rng);
    QMatrix g(n, n);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) g(i, i) = rows[i][i] = diag[i];

    const Rational by_poly = weyl_discriminant(g).value;
    const Rational by_product = oracle::diagonal_discriminant(diag);
    const Rational by_det = oracle::restricted_discriminant(rows);
    if (by_poly == by_product && by_product == by_det)
      ++agree;
    else
      res.failures.push_back("diag(" + [&] {
        std::vector<std::string> s;
        for (const auto& x : diag) s.push_back(to_string(x));
        return join(s);
      }() + "): " + to_string(by_poly) + " / " + to_string(by_product) + " / " + to_string(by_det));
  }
  bool identity_ok = true;
  for (std::size_t n = 2; n <= 4; ++n)
    if (weyl_discriminant(QMatrix::identity(n)).value != 1) identity_ok = false;
  if (!identity_ok) res.failures.push_back("D(identity) != 1");
  res.actual = std::to_string(agree) + "/100 agree; D(1) " + (identity_ok ? "= 1" : "!= 1");
}

void check_sl_index(CheckResult& res) {
  res.name = "SL(n, Z/N) order: formula = enumeration, coprime multiplicativity";
  res.expected = "equal for n in {2,3}, N = 2..8; multiplicative on 20 coprime pairs";
  int agree = 0;
  for (int n : {2, 3})
    for (int N = 2; N <= 8; ++N) {
      const BigInt formula = sl_index(n, static_cast<std::uint64_t>(N)).value;
      const BigInt brute = BigInt(std::to_string(oracle::sl_order_by_enumeration(n, N)));
      if (formula == brute)
        ++agree;
      else
        res.failures.push_back("n=" + std::to_string(n) + ", N=" + std::to_string(N) + ": " + to_string(formula) +
                               " vs " + to_string(brute));
    }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> level(2, 400);
  std::uniform_int_distribution<int> rank(2, 5);
  int pairs = 0;
  while (pairs < 20) {
    const std::uint64_t a = level(rng), b = level(rng);
    if (std::gcd(a, b) != 1) continue;
    const int n = rank(rng);
    ++pairs;
    if (sl_index(n, a * b).value != sl_index(n, a).value * sl_index(n, b).value)
      res.failures.push_back("n=" + std::to_string(n) + ", " + std::to_string(a) + "x" + std::to_string(b) +
                             " not multiplicative");
  }
  res.actual = std::to_string(agree) + "/14 orders agree; " + std::to_string(pairs) + " coprime pairs tested";
}

void check_mellin(CheckResult& res) {
  res.name = "Mellin finite parts against closed forms";
  res.expected = "-ln(lambda) within 1e-8; -2 sqrt(pi) within 1e-7; split-point spread within 1e-7; < 5 s";
  const auto start = Clock::now();
  double worst_exp = 0.0, worst_half = 0.0, worst_split = 0.0;
  for (double lambda : {0.5, 1.0, 2.0, std::exp(1.0)}) {
    const TailFunction f{[lambda](double t) { return std::exp(-lambda * t); }, 1.0, lambda};
    std::vector<double> values;
    for (double t0 : {0.5, 1.0, 2.0}) values.push_back(fp_mellin(f, exponential_expansion(lambda, 12, 0, t0)));
    const double err = std::abs(values[1] + std::log(lambda));
    worst_exp = std::max(worst_exp, err);
    if (err > 1e-8) res.failures.push_back("lambda=" + fmt(lambda) + ": error " + fmt(err));
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    worst_split = std::max(worst_split, *hi - *lo);
  }
  {
    const TailFunction f{[](double t) { return std::exp(-t) / std::sqrt(t); }, 1.0, 1.0};
    std::vector<double> values;
    for (double t0 : {0.5, 1.0, 2.0})
      values.push_back(fp_mellin(f, exponential_expansion(1.0, 12, Rational(-1, 2), t0)));
    const double want = -2.0 * std::sqrt(M_PI);
    worst_half = std::abs(values[1] - want);
    if (worst_half > 1e-7) res.failures.push_back("t^{-1/2}e^{-t}: error " + fmt(worst_half));
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    worst_split = std::max(worst_split, *hi - *lo);
  }
  if (worst_split > 1e-7) res.failures.push_back("split-point spread " + fmt(worst_split));
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs >= 5.0) res.failures.push_back("took " + fmt(secs) + " s");
  res.actual = "max errors " + fmt(worst_exp) + ", " + fmt(worst_half) + "; spread " + fmt(worst_split) + "; " +
               fmt(secs) + " s";
}

void check_budget(CheckResult& res) {
  res.name = "error budget: beta* closed form and exponent constraints";
  res.expected = "e1(beta*) = -k exactly; beta*(1,1,1,1) = (sqrt5-1)/2 within 1e-12; all_ok on 100 draws";
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(1, 12), den(1, 5);
  int exact_ok = 0;
  for (int i = 0; i < 50; ++i) {
    auto draw = [&] {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      return q;
    };
    const Rational C2 = draw(), C4 = draw(), Cn = draw(), k = draw();
    const QuadraticSurd beta = beta_max_exact(C2, C4, Cn, k);
    const QuadraticSurd e1 = e1_exact(C2, C4, Cn, beta);
    if (e1 == QuadraticSurd(-k, 0, beta.radicand()))
      ++exact_ok;
    else
      res.failures.push_back("e1(beta*) != -k for k = " + to_string(k));
  }
  const double golden = beta_max(1, 1, 1, 1);
  const double golden_err = std::abs(golden - (std::sqrt(5.0) - 1.0) / 2.0);
  if (golden_err > 1e-12) res.failures.push_back("beta*(1,1,1,1) error " + fmt(golden_err));

  std::uniform_real_distribution<double> c(0.1, 10.0), kk(0.5, 10.0), eps(1e-3, 0.5), cp(0.0, 5.0);
  int draws_ok = 0;
  for (int i = 0; i < 100; ++i) {
    BudgetParams p;
    p.C2 = c(rng);
    p.C4 = c(rng);
    p.Cn = c(rng);
    p.k = kk(rng);
    p.epsilon = eps(rng);
    p.c_prime = cp(rng);
    p.beta = beta_max(p.C2, p.C4, p.Cn, p.k);
    p.lambda = lambda_min(p.k, p.beta, p.epsilon, p.c_prime);
    const Exponents e = exponents(p);
    if (e.all_ok && e.lambda_above_cprime)
      ++draws_ok;
    else
      res.failures.push_back("draw " + std::to_string(i) + ": exponents " + fmt(e.e_spec) + ", " + fmt(e.e1) + ", " +
                             fmt(e.e2) + " vs -k = " + fmt(-p.k));
  }
  res.actual = std::to_string(exact_ok) + "/50 exact; golden error " + fmt(golden_err) + "; " +
               std::to_string(draws_ok) + "/100 draws ok";
}

void check_tuples(CheckResult& res) {
  res.name = "tuple bound and d_M nonvanishing on A2, A3";
  res.expected = "count <= |S|^d |L(M)|^d for |S| <= 4; d symmetric; d(m, m, G) true";
  std::vector<std::string> got;
  for (int r : {2, 3}) {
    const RootSystem rs = build_root_system({SimpleType(Series::A, r)});
    const LeviDatum m0 = minimal_levi(rs);
    const LeviDatum g = full_levi(rs);
    const FSets fs = f_sets(rs, m0);
    const std::size_t levis = fs.L.size();
    const std::size_t base = static_cast<std::size_t>(
        std::find(fs.L.begin(), fs.L.end(), m0) - fs.L.begin());
    const int d = relative_a_dim(rs, m0, g);
    for (int s = 1; s <= 4; ++s) {
      const BigInt count = count_contributing_tuples(rs, m0, s);
      const BigInt brute = BigInt(std::to_string(oracle::tuples_by_enumeration(levis, base, s, d)));
      BigInt bound = 1;
      for (int i = 0; i < d; ++i) bound *= BigInt(s) * BigInt(static_cast<unsigned long>(levis));
      if (count != brute || count > bound)
        res.failures.push_back("A" + std::to_string(r) + ", |S|=" + std::to_string(s) + ": count " +
                               to_string(count) + ", brute " + to_string(brute) + ", bound " + to_string(bound));
      got.push_back("A" + std::to_string(r) + "/" + std::to_string(s) + ":" + to_string(count));
    }
    int triples = 0;
    for (const auto& m : fs.L) {
      if (!d_nonvanishing(rs, m, m, g)) res.failures.push_back("d(m, m, G) vanishes on A" + std::to_string(r));
      for (const auto& l1 : fs.L) {
        if (!m.levi_roots.is_subset_of(l1.levi_roots)) continue;
        for (const auto& l2 : fs.L) {
          if (!m.levi_roots.is_subset_of(l2.levi_roots)) continue;
          ++triples;
          if (d_nonvanishing(rs, m, l1, l2) != d_nonvanishing(rs, m, l2, l1))
            res.failures.push_back("d not symmetric on A" + std::to_string(r));
        }
      }
    }
    got.push_back(std::to_string(triples) + " triples");
  }
  res.actual = join(got);
}

}  // namespace

CheckResult run_check(int id, const ReproduceOptions& opts) {
  CheckResult res;
  res.id = id;
  if (id < 1 || id > kNumChecks) throw DomainError("no check " + std::to_string(id));
  const auto start = Clock::now();
  try {
    switch (id) {
      case 1: check_sl_k(res, opts); break;
      case 2: check_so_k(res); break;
      case 3: check_restriction(res); break;
      case 4: check_pairs_vs_dual_coxeter(res); break;
      case 5: check_f_decomposition(res); break;
      case 6: check_orbit_dims(res); break;
      case 7: check_discriminant(res); break;
      case 8: check_sl_index(res); break;
      case 9: check_mellin(res); break;
      case 10: check_budget(res); break;
      case 11: check_tuples(res); break;
    }
  } catch (const std::exception& e) {
    res.failures.push_back(std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  res.passed = res.failures.empty();
  return res;
}

std::vector<CheckResult> run_reproduce(const ReproduceOptions& opts) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kNumChecks; ++id) out.push_back(run_check(id, opts));
  return out;
}

}  // namespace tracegeo
