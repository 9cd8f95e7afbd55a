#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tracegeo/arithmetic.hpp"
#include "tracegeo/error.hpp"
#include "tracegeo/error_budget.hpp"
#include "tracegeo/group_spec.hpp"
#include "tracegeo/invariants_k.hpp"
#include "tracegeo/local_data.hpp"
#include "tracegeo/mellin_fp.hpp"
#include "tracegeo/nilpotent.hpp"
#include "tracegeo/parabolic.hpp"
#include "tracegeo/reproduce.hpp"

using nlohmann::json;
using namespace tracegeo;

namespace {

constexpr const char* kSchema = "1";

// Rounded to 15 significant digits so the shortest round-trip form is stable.
double num(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string num_text(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

json with_schema(json body) {
  body["schema"] = kSchema;
  return body;
}

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// Inline JSON when the argument starts like JSON, otherwise a file path.
json json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  std::string text = arg;
  if (first == std::string::npos || (arg[first] != '[' && arg[first] != '{')) {
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot read '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw DomainError("matrix entries must be integers or \"num/den\" strings");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("'" + s + "' is not a non-negative integer");
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw DomainError("'" + s + "' is out of range");
  }
}

AlgebraType parse_algebra(const std::string& s) {
  if (s.rfind("gl", 0) == 0) {
    const auto n = parse_u64(s.substr(2));
    if (n < 1 || n > 1000) throw DomainError("gl(n) needs 1 <= n <= 1000");
    return GlType{static_cast<int>(n)};
  }
  const ParsedGroupSpec p = parse_group_spec(s);
  if (p.spec.factors.size() != 1 || p.spec.torus_rank != 0 || p.spec.restriction_degree != 1 || p.relative_path)
    throw DomainError("orbits needs a single simple type such as B3, or gl<n>");
  return p.spec.factors.front();
}

// ---- k ---------------------------------------------------------------

struct KArgs {
  std::string spec;
  std::string relative;
  int degree = 0;
  std::string method;
  bool json = false;
};

int cmd_k(const KArgs& a) {
  GroupSpec g = load_group_spec(a.spec);
  if (!a.relative.empty()) g.relative = relative_datum_from_json(json_argument(a.relative));
  if (a.degree != 0) g.restriction_degree = a.degree;
  validate(g);

  json out = with_schema({{"group", a.spec}, {"restriction_degree", g.restriction_degree}});
  std::ostringstream text;
  if (!a.method.empty()) {
    int k = 0;
    if (a.method == "pairs") {
      GroupSpec abs = g;
      abs.relative.reset();
      k = k_by_pairs(abs);
    } else if (a.method == "richardson") {
      k = k_richardson(g);
    } else {
      k = k_min_orbit(g);
    }
    out["method"] = a.method;
    out["k"] = k;
    text << "k = " << k << " (" << a.method << ")\n";
  } else {
    const KReport r = k_report(g);
    const int k = r.richardson_relative ? *r.richardson_relative : r.pairs;
    out["k"] = k;
    out["methods"] = {{"pairs", r.pairs}, {"richardson", r.richardson_absolute}, {"min_orbit", r.min_orbit}};
    if (r.richardson_relative) out["methods"]["richardson_relative"] = *r.richardson_relative;
    out["relative_disagrees"] = r.relative_disagrees;
    text << "k = " << k << "\n  pairs       " << r.pairs << "\n  richardson  " << r.richardson_absolute
         << "\n  min-orbit   " << r.min_orbit << "\n";
    if (r.richardson_relative) {
      text << "  relative    " << *r.richardson_relative << "\n";
      if (r.relative_disagrees) text << "  note: relative value differs from the geometric minimal orbit\n";
    }
  }
  emit(out, a.json, text.str());
  return 0;
}

// ---- orbits ----------------------------------------------------------

int cmd_orbits(const std::string& type_text, bool as_json) {
  const AlgebraType t = parse_algebra(type_text);
  std::vector<OrbitLabel> labels;
  const auto* simple = std::get_if<SimpleType>(&t);
  if (simple && !simple->is_classical()) {
    OrbitLabel triv;
    triv.kind = OrbitKind::Trivial;
    triv.type = t;
    OrbitLabel min = triv;
    min.kind = OrbitKind::Minimal;
    labels = {min, triv};
  } else {
    labels = list_orbits(t);
  }
  int max_dim = 0, min_nontrivial = INT32_MAX;
  for (const auto& o : labels) {
    const int d = orbit_dim(o);
    max_dim = std::max(max_dim, d);
    if (d > 0) min_nontrivial = std::min(min_nontrivial, d);
  }
  json arr = json::array();
  std::ostringstream text;
  text << algebra_name(t) << ": " << labels.size() << " orbit labels\n";
  for (const auto& o : labels) {
    const int d = orbit_dim(o);
    json flags = json::array();
    if (d == 0) flags.push_back("trivial");
    if (d == min_nontrivial) flags.push_back("minimal");
    if (d == max_dim && d > 0 && o.kind == OrbitKind::Partition) flags.push_back("regular");
    if (o.very_even) flags.push_back("very_even");
    arr.push_back({{"label", o.label()}, {"dim", d}, {"flags", flags}});
    text << "  " << o.label() << "  dim " << d;
    for (const auto& f : flags) text << "  " << f.get<std::string>();
    text << "\n";
  }
  emit(with_schema({{"type", algebra_name(t)}, {"orbits", arr}}), as_json, text.str());
  return 0;
}

// ---- parabolics ------------------------------------------------------

int cmd_parabolics(const std::string& spec, bool as_json) {
  const GroupSpec g = load_group_spec(spec);
  const RootSystem rs = g.absolute();
  const auto all = enumerate_parabolic_subsets(rs);
  json roots = json::array();
  for (std::size_t i = 0; i < rs.size(); ++i) roots.push_back(rs.simple_coordinates(i));
  json arr = json::array();
  std::ostringstream text;
  text << spec << ": " << all.size() << " parabolic subsets (" << rs.size() << " roots)\n";
  for (const auto& p : all) {
    const LeviDatum l = levi_of(p);
    const auto members = p.members.members();
    const auto levi = l.levi_roots.members();
    const int dim_v = dim_unipotent_radical(p);
    arr.push_back({{"members", members}, {"levi", levi}, {"dim_V", dim_v}, {"a_M_dim", l.a_M_dim}});
    text << "  |P| = " << members.size() << "  |levi| = " << levi.size() << "  dim V = " << dim_v
         << "  dim a_M = " << l.a_M_dim << "\n";
  }
  emit(with_schema({{"group", spec}, {"roots", roots}, {"parabolics", arr}}), as_json, text.str());
  return 0;
}

// ---- discriminant ----------------------------------------------------

int cmd_discriminant(const std::string& matrix_arg, const std::string& primes_arg, bool as_json) {
  const json m = json_argument(matrix_arg);
  if (!m.is_array() || m.empty()) throw DomainError("--matrix must be a non-empty JSON array of rows");
  const std::size_t n = m.size();
  QMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) throw DomainError("--matrix must be square");
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rational_of(m[i][j]);
  }
  std::optional<std::vector<BigInt>> primes;
  if (!primes_arg.empty()) {
    primes.emplace();
    for (const auto& s : split_list(primes_arg)) {
      const auto p = parse_u64(s);
      if (mpz_probab_prime_p(BigInt(std::to_string(p)).get_mpz_t(), 30) == 0)
        throw DomainError("'" + s + "' is not prime");
      primes->push_back(BigInt(std::to_string(p)));
    }
  }
  const DiscriminantValue d = weyl_discriminant(g, primes);
  json vals = json::object(), abs_p = json::object();
  std::ostringstream text;
  text << "D = " << to_string(d.value) << "\n|D|_inf = " << to_string(d.abs_inf)
       << "\ncentralizer dim = " << d.centralizer_dim << "\n";
  for (const auto& [p, v] : d.p_valuations) {
    vals[to_string(p)] = v;
    abs_p[to_string(p)] = to_string(padic_abs(d.value, p));
    text << "v_" << to_string(p) << " = " << v << "\n";
  }
  emit(with_schema({{"value", to_string(d.value)},
                    {"abs_inf", to_string(d.abs_inf)},
                    {"p_valuations", vals},
                    {"p_abs", abs_p},
                    {"centralizer_dim", d.centralizer_dim}}),
       as_json, text.str());
  return 0;
}

// ---- index / levels --------------------------------------------------

int cmd_index(const std::string& group, int n, const std::string& level, bool as_json) {
  if (group != "sl") throw DomainError("only --group sl is supported");
  const std::uint64_t N = parse_u64(level);
  const SlIndex idx = sl_index(n, N);
  const LevelData ld = level_data(N);
  std::ostringstream text;
  text << "[SL(" << n << ",Z) : Gamma(" << N << ")] = " << to_string(idx.value) << "\n";
  if (idx.small_level) text << "note: N <= 2, value is |SL(n, Z/N)|\n";
  emit(with_schema({{"group", "sl"},
                    {"n", n},
                    {"level", N},
                    {"primes", ld.primes},
                    {"index", to_string(idx.value)},
                    {"small_level", idx.small_level}}),
       as_json, text.str());
  return 0;
}

int cmd_prime_fixed(const std::string& levels_arg, const std::string& declared_arg, bool as_json) {
  std::vector<std::uint64_t> levels;
  for (const auto& s : split_list(levels_arg)) levels.push_back(parse_u64(s));
  std::optional<std::vector<std::uint64_t>> declared;
  if (!declared_arg.empty()) {
    declared.emplace();
    for (const auto& s : split_list(declared_arg)) declared->push_back(parse_u64(s));
  }
  const PrimeFixedReport r = prime_fixed_check(levels, declared);
  std::ostringstream text;
  text << (r.prime_fixed ? "prime-fixed" : "not prime-fixed") << "\n";
  for (auto o : r.offenders) text << "  offender " << o << "\n";
  emit(with_schema({{"prime_fixed", r.prime_fixed},
                    {"reference", r.reference},
                    {"support", r.support},
                    {"offenders", r.offenders}}),
       as_json, text.str());
  return 0;
}

// ---- mellin-fp -------------------------------------------------------

struct MellinArgs {
  std::string preset;
  double lambda = 1.0;
  double t0 = 1.0;
  int order = 12;
  std::string spec;
  bool json = false;
};

AsymptoticExpansion expansion_from_json(const json& j, double t0) {
  AsymptoticExpansion e;
  e.valid_to = t0;
  if (j.contains("remainder_order")) e.remainder_order = rational_of(j["remainder_order"]);
  for (const auto& term : j.value("terms", json::array())) {
    AsymptoticExpansion::Term t;
    t.exponent = rational_of(term.at("exponent"));
    t.coefficient = term.at("coefficient").get<double>();
    e.terms.push_back(t);
  }
  return e;
}

int cmd_mellin(const MellinArgs& a) {
  TailFunction f;
  AsymptoticExpansion e;
  if (!a.spec.empty()) {
    const json j = json_argument(a.spec);
    try {
      const double t0 = j.value("t0", 1.0);
      const json decay = j.value("decay", json::object());
      const double C = decay.value("C", 1.0), lambda = decay.value("lambda", 1.0);
      if (j.contains("preset")) {
        const json p = j["preset"];
        if (p.value("name", std::string("exp")) != "exp") throw DomainError("unknown preset");
        const double l = p.at("lambda").get<double>();
        const Rational shift = p.contains("shift") ? rational_of(p["shift"]) : Rational(0);
        const double sd = shift.get_d();
        e = j.contains("terms") ? expansion_from_json(j, t0)
                                : exponential_expansion(l, p.value("order", 12), shift, t0);
        f = TailFunction{[l, sd](double t) { return std::pow(t, sd) * std::exp(-l * t); }, C, lambda};
      } else if (j.contains("samples")) {
        e = expansion_from_json(j, t0);
        std::vector<std::pair<double, double>> samples;
        for (const auto& s : j["samples"]) samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
        f = sampled_tail_function(std::move(samples), e, C, lambda);
      } else {
        throw DomainError("--spec needs either \"preset\" or \"samples\"");
      }
    } catch (const json::exception& ex) {
      throw DomainError(std::string("malformed mellin spec: ") + ex.what());
    }
  } else {
    if (a.preset != "exp") throw DomainError("--preset exp or --spec is required");
    if (!(a.lambda > 0)) throw DomainError("--lambda must be positive");
    const double l = a.lambda;
    e = exponential_expansion(l, a.order, 0, a.t0);
    f = TailFunction{[l](double t) { return std::exp(-l * t); }, 1.0, l};
  }
  const MellinFinitePart r = mellin_finite_part(f, e);
  std::ostringstream text;
  text << "FP = " << num_text(r.value) << "\n  c_-1 = " << num_text(r.pole) << "\n  c_0  = " << num_text(r.constant)
       << "\n";
  emit(with_schema({{"value", num(r.value)},
                    {"pole", num(r.pole)},
                    {"constant", num(r.constant)},
                    {"crossover", num(r.crossover)},
                    {"mismatch", num(r.mismatch)}}),
       a.json, text.str());
  return 0;
}

// ---- budget ----------------------------------------------------------

struct BudgetArgs {
  BudgetParams p;
  std::optional<double> beta, lambda;
  bool json = false;
};

int cmd_budget(BudgetArgs a) {
  BudgetParams& p = a.p;
  p.beta = a.beta ? *a.beta : beta_max(p.C2, p.C4, p.Cn, p.k);
  p.lambda = a.lambda ? *a.lambda : lambda_min(p.k, p.beta, p.epsilon, p.c_prime);
  validate(p);
  const Exponents e = exponents(p);
  const double aexp = a_exponent(p);
  std::ostringstream text;
  text << "beta = " << num_text(p.beta) << "\nlambda = " << num_text(p.lambda) << "\nexponents: spectral "
       << num_text(e.e_spec) << ", E1 " << num_text(e.e1) << ", E2 " << num_text(e.e2) << " (target <= "
       << num_text(-p.k) << ")\nall_ok = " << (e.all_ok ? "true" : "false") << "\nerror ~ vol N^-"
       << num_text(p.k) << " (log N)^" << num_text(aexp) << "\n";
  emit(with_schema({{"beta", num(p.beta)},
                    {"lambda", num(p.lambda)},
                    {"exponents", {{"spectral", num(e.e_spec)}, {"e1", num(e.e1)}, {"e2", num(e.e2)}}},
                    {"all_ok", e.all_ok},
                    {"lambda_above_cprime", e.lambda_above_cprime},
                    {"a_exponent", num(aexp)}}),
       a.json, text.str());
  return e.all_ok ? 0 : 4;
}

// ---- reproduce -------------------------------------------------------

int cmd_reproduce(const std::string& fault, bool as_json) {
  ReproduceOptions opts;
  if (!fault.empty()) {
    if (fault != "k-sl4") throw DomainError("unknown fault '" + fault + "' (known: k-sl4)");
    opts.inject_k_sl4_fault = true;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_reproduce(opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool all = true;
  json checks = json::array(), failing = json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    all = all && r.passed;
    if (!r.passed) failing.push_back(r.id);
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"expected", r.expected},
                      {"actual", r.actual},
                      {"seconds", num(r.seconds)},
                      {"failures", r.failures}});
    text << (r.passed ? "PASS " : "FAIL ") << r.id << ". " << r.name << " (" << num_text(r.seconds) << " s)\n";
    if (!r.passed) {
      text << "     expected: " << r.expected << "\n     actual:   " << r.actual << "\n";
      for (const auto& f : r.failures) text << "     - " << f << "\n";
    }
  }
  text << (all ? "all checks passed" : "FAILED") << " in " << num_text(secs) << " s\n";
  emit(with_schema({{"passed", all}, {"seconds", num(secs)}, {"checks", checks}, {"failing", failing}}), as_json,
       text.str());
  return all ? 0 : 1;
}

int run_guarded(const std::function<int()>& body, bool as_json) {
  auto fail = [&](const char* kind, const std::exception& e, int code) {
    if (as_json) std::cout << with_schema({{"error", kind}, {"message", e.what()}}).dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return code;
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return fail("parse", e, 2);
  } catch (const DomainError& e) {
    return fail("domain", e, 2);
  } catch (const ResourceError& e) {
    return fail("resource", e, 3);
  } catch (const NumericError& e) {
    return fail("numeric", e, 4);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tracegeo: root data, unipotent orbits, k(G), discriminants, indices and error budgets"};
  app.require_subcommand(1);
  bool as_json = false;
  std::function<int()> action;

  KArgs ka;
  auto* k = app.add_subcommand("k", "decay exponent k(G) by pair enumeration, Richardson and minimal orbit");
  k->add_option("group", ka.spec, "group spec, e.g. A2, D3xA1+T2, A1@res=3")->required();
  k->add_option("--relative", ka.relative, "relative datum JSON (file or inline)");
  k->add_option("--degree", ka.degree, "restriction degree")->check(CLI::PositiveNumber);
  k->add_option("--method", ka.method, "single method")->check(CLI::IsMember({"pairs", "richardson", "minorbit"}));
  k->add_flag("--json", ka.json);
  k->callback([&] { action = [&] { return cmd_k(ka); }; as_json = ka.json; });

  std::string orbit_type;
  bool orbits_json = false;
  auto* orbits = app.add_subcommand("orbits", "nilpotent orbits of gl<n> or a simple type");
  orbits->add_option("type", orbit_type, "gl4, A3, B2, C3, D4, E8, ...")->required();
  orbits->add_flag("--json", orbits_json);
  orbits->callback([&] { action = [&] { return cmd_orbits(orbit_type, orbits_json); }; as_json = orbits_json; });

  std::string para_spec;
  bool para_json = false;
  auto* para = app.add_subcommand("parabolics", "all parabolic root subsets with Levi data");
  para->add_option("group", para_spec)->required();
  para->add_flag("--json", para_json);
  para->callback([&] { action = [&] { return cmd_parabolics(para_spec, para_json); }; as_json = para_json; });

  std::string matrix, primes;
  bool disc_json = false;
  auto* disc = app.add_subcommand("discriminant", "Weyl discriminant of a semisimple rational matrix");
  disc->add_option("--matrix", matrix, "JSON n x n array of integers or \"num/den\" (inline or file)")->required();
  disc->add_option("--primes", primes, "report valuations at these primes, e.g. 2,3,5");
  disc->add_flag("--json", disc_json);
  disc->callback([&] { action = [&] { return cmd_discriminant(matrix, primes, disc_json); }; as_json = disc_json; });

  std::string group = "sl", level;
  int n = 2;
  bool index_json = false;
  auto* index = app.add_subcommand("index", "index of the principal congruence subgroup");
  index->add_option("--group", group)->check(CLI::IsMember({"sl"}));
  index->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  index->add_option("--level", level)->required();
  index->add_flag("--json", index_json);
  index->callback([&] { action = [&] { return cmd_index(group, n, level, index_json); }; as_json = index_json; });

  std::string levels_list, declared;
  bool levels_json = false;
  auto* levels = app.add_subcommand("levels", "level-sequence checks");
  levels->require_subcommand(1);
  auto* pf = levels->add_subcommand("check-prime-fixed", "whether every level has prime support in a fixed set");
  pf->add_option("levels", levels_list, "comma-separated levels")->required();
  pf->add_option("--primes", declared, "declared prime set");
  pf->add_flag("--json", levels_json);
  pf->callback([&] {
    action = [&] { return cmd_prime_fixed(levels_list, declared, levels_json); };
    as_json = levels_json;
  });

  MellinArgs ma;
  auto* mellin = app.add_subcommand("mellin-fp", "finite part at s = 0 of the Mellin transform over s Gamma(s)");
  mellin->add_option("--preset", ma.preset)->check(CLI::IsMember({"exp"}));
  mellin->add_option("--lambda", ma.lambda);
  mellin->add_option("--t0", ma.t0, "split point");
  mellin->add_option("--order", ma.order, "expansion order for the preset")->check(CLI::Range(1, 40));
  mellin->add_option("--spec", ma.spec, "JSON {terms, t0, decay:{C,lambda}, samples|preset} (inline or file)");
  mellin->add_flag("--json", ma.json);
  mellin->callback([&] { action = [&] { return cmd_mellin(ma); }; as_json = ma.json; });

  BudgetArgs ba;
  auto* budget = app.add_subcommand("budget", "choose beta and lambda and evaluate the error exponents");
  budget->add_option("--k", ba.p.k)->required();
  budget->add_option("--C2", ba.p.C2);
  budget->add_option("--C4", ba.p.C4);
  budget->add_option("--Cn", ba.p.Cn);
  budget->add_option("--eps", ba.p.epsilon);
  budget->add_option("--cprime", ba.p.c_prime);
  budget->add_option("--b", ba.p.b_conj, "log power of the global-coefficient bound");
  budget->add_option("--m", ba.p.m_nonarch, "log power of the non-archimedean bound");
  budget->add_option("--beta", ba.beta, "override beta (default: largest admissible)");
  budget->add_option("--lambda", ba.lambda, "override lambda (default: smallest admissible)");
  budget->add_flag("--json", ba.json);
  budget->callback([&] { action = [&] { return cmd_budget(ba); }; as_json = ba.json; });

  std::string fault;
  bool repro_json = false;
  auto* repro = app.add_subcommand("reproduce", "run the full check suite");
  repro->add_option("--inject-fault", fault, "deliberately break one value (k-sl4)");
  repro->add_flag("--json", repro_json);
  repro->callback([&] { action = [&] { return cmd_reproduce(fault, repro_json); }; as_json = repro_json; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run_guarded(action, as_json);
}
