#include "qrg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "qrg/bounds.hpp"
#include "qrg/character_table.hpp"
#include "qrg/classes.hpp"
#include "qrg/code.hpp"
#include "qrg/error.hpp"
#include "qrg/groups.hpp"
#include "qrg/mixing.hpp"
#include "qrg/productfree.hpp"
#include "qrg/serialize.hpp"

namespace qrg {

namespace {

constexpr int kSchema = 1;

struct RunConfig {
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  unsigned workers = 1;
  std::uint64_t element_budget = kDefaultElementBudget;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::string output;
};

struct CommandArgs {
  std::string command;
  std::string family;
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::uint32_t depth = 2;
  std::vector<std::uint32_t> factors;
  std::string mode;
  std::uint64_t trials = 100;
  bool full = false;
  bool witness = false;
  std::string manifest;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::PrimeSearchFailed:
      return kExitResource;
    case ErrorKind::Internal:
      return kExitVerificationFailed;
    default:
      return kExitUsage;
  }
}

std::uint32_t require(std::uint32_t value, const char* flag) {
  if (value == 0) throw UsageError(std::string("missing or zero --") + flag);
  return value;
}

GroupTable build_group(const CommandArgs& a, const RunConfig& cfg) {
  const auto budget = cfg.element_budget;
  const std::string& f = a.family;
  if (f == "sl" || f == "slk") return build_sl(a.k == 0 ? 2 : a.k, require(a.p, "p"), require(a.n, "n"), budget);
  if (f == "sl2") return build_sl(2, require(a.p, "p"), require(a.n, "n"), budget);
  if (f == "sp" || f == "sp2k") return build_sp(a.k == 0 ? 1 : a.k, require(a.p, "p"), require(a.n, "n"), budget);
  if (f == "alt") return build_alt(require(a.k, "k"), budget);
  if (f == "sym") return build_sym(require(a.k, "k"), budget);
  if (f == "tree") return build_tree_level(require(a.k, "k"), a.depth, budget);
  if (f == "abelian") return build_abelian(a.factors, budget);
  if (f == "quaternion") return build_quaternion();
  if (f.empty()) throw UsageError("missing --family");
  fail(ErrorKind::UnsupportedFamily, "unknown group family '" + f + "'");
}

std::optional<std::uint64_t> expected_order(const GroupDescriptor& d) {
  if (d.family == "sl") return sl_order(d.k, d.p, d.n);
  if (d.family == "sp") return sp_order(d.k, d.p, d.n);
  if (d.family == "tree") return tree_order(d.k, d.depth);
  if (d.family == "alt" || d.family == "sym") {
    std::uint64_t f = 1;
    for (std::uint32_t i = 2; i <= d.k; ++i) f *= i;
    return d.family == "alt" && d.k >= 2 ? f / 2 : f;
  }
  if (d.family == "abelian") {
    std::uint64_t f = 1;
    for (auto x : d.factors) f *= x;
    return f;
  }
  if (d.family == "quaternion") return 8;
  return std::nullopt;
}

Json cmd_group(const CommandArgs& a, const RunConfig& cfg) {
  const GroupTable g = build_group(a, cfg);
  const auto expected = expected_order(g.descriptor());
  Json j{{"group", to_json(g.descriptor())}};
  j["order_formula"] = expected ? Json(*expected) : Json(nullptr);
  j["pass"] = !expected || *expected == g.order();
  return j;
}

Json faithful_json(const FaithfulDegree& f) {
  Json j{{"degree", f.degree}, {"characters", f.characters}};
  j["single_irreducible"] = f.single_irreducible ? Json(*f.single_irreducible) : Json(nullptr);
  return j;
}

Json cmd_degrees(const CommandArgs& a, const RunConfig& cfg) {
  const GroupTable g = build_group(a, cfg);
  const ClassData cd = conjugacy_classes(g);
  const CharacterTable t = character_table(g, cd, cfg.seed);
  Json j{{"table", to_json(t, a.full)}};
  bool pass = true;
  if (t.count() > 1) {
    j["m"] = min_nontrivial_degree(t);
    j["m_f"] = faithful_json(min_faithful_degree(t, cd));
  } else {
    j["m"] = nullptr;
    j["m_f"] = nullptr;
  }
  if (g.order() <= 200) {
    auto degrees = t.degrees;
    std::sort(degrees.begin(), degrees.end());
    const bool agrees = regular_representation_degrees(g, cd, cfg.seed) == degrees;
    j["regular_oracle_agrees"] = agrees;
    pass = pass && agrees;
  }
  j["pass"] = pass;
  return j;
}

Json cmd_bounds(const CommandArgs& a, const RunConfig& cfg) {
  Family family = parse_family(a.family.empty() ? throw UsageError("missing --family") : a.family);
  std::uint32_t k = a.k;
  if (family == Family::SL2 || (family == Family::SLk && k == 2)) {
    family = Family::SL2;
    k = 2;
  } else if (family == Family::Sp2k && k == 0) {
    k = 1;
  }
  require(k, "k");
  const std::uint32_t p = require(a.p, "p");
  const std::uint32_t n = require(a.n, "n");
  const Rational h = h_bound(family, k, p);
  const Rational hf = hf_bound(family, k, p, n);

  const GroupTable g = family == Family::Sp2k ? build_sp(k, p, n, cfg.element_budget)
                                              : build_sl(k, p, n, cfg.element_budget);
  const ClassData cd = conjugacy_classes(g);
  const CharacterTable t = character_table(g, cd, cfg.seed);
  const auto m = static_cast<std::int64_t>(min_nontrivial_degree(t));
  const FaithfulDegree mf = min_faithful_degree(t, cd);

  std::vector<BoundReport> reports;
  reports.push_back(verify_bound("m(" + display_name(g.descriptor()) + ")", m, h, Relation::GreaterEqual,
                                 {"minimal degree bound h"}));
  reports.push_back(verify_bound("m_f(" + display_name(g.descriptor()) + ")", static_cast<std::int64_t>(mf.degree),
                                 hf, Relation::GreaterEqual, {"faithful degree bound h_f"}));
  if (family == Family::SL2 && n >= 2) {
    reports.push_back(verify_bound("m_f(" + display_name(g.descriptor()) + ")",
                                   static_cast<std::int64_t>(mf.degree), bgc_bound(p, n), Relation::GreaterEqual,
                                   {"Bourgain-Gamburd bound"}));
  }
  Json j{{"group", to_json(g.descriptor())}, {"m", m}, {"m_f", faithful_json(mf)}};
  Json rs = Json::array();
  bool pass = true;
  for (const auto& r : reports) {
    rs.push_back(to_json(r));
    pass = pass && r.pass;
  }
  j["reports"] = rs;
  try {
    j["pf_interval"] = to_json(pf_bounds_profinite(family, k, p));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OutOfTheoremRange) throw;
  }
  j["pass"] = pass;
  return j;
}

struct Tally {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double worst_ratio = std::numeric_limits<double>::infinity();

  void record(bool pass, double ratio) {
    ++trials;
    if (!pass) ++failures;
    if (std::isfinite(ratio)) worst_ratio = std::min(worst_ratio, ratio);
  }
  Json json(std::uint64_t seed) const {
    Json j{{"test", name}, {"trials", trials}, {"failures", failures}, {"seed", seed}};
    j["worst_ratio"] = std::isfinite(worst_ratio) ? approx_json(worst_ratio) : Json(nullptr);
    return j;
  }
};

double ratio(double allowed, double actual) {
  return actual > 0 ? allowed / actual : std::numeric_limits<double>::infinity();
}

Json cmd_mixing(const CommandArgs& a, const RunConfig& cfg) {
  const GroupTable g = build_group(a, cfg);
  const ClassData cd = conjugacy_classes(g);
  const CharacterTable t = character_table(g, cd, cfg.seed);
  const std::uint64_t m = min_nontrivial_degree(t);
  const std::size_t order = g.order();
  g.ensure_cayley_table();
  std::mt19937_64 rng(cfg.seed);
  std::vector<Tally> tallies;

  Tally functions{"mixing_inequality"};
  for (std::uint64_t i = 0; i < a.trials; ++i) {
    const GroupFunction f1 = random_mean_zero_function(g, rng);
    const GroupFunction f2 = random_function(g, rng);
    const MixingCheck c = mixing_check(f1, f2, m, cfg.tolerance);
    functions.record(c.pass, ratio(c.rhs, c.lhs));
  }
  tallies.push_back(functions);

  Tally sets{"mixing_defect"};
  for (std::uint64_t i = 0; i < a.trials; ++i) {
    const auto sa = random_subset(g, rng);
    const auto sb = random_subset(g, rng);
    const MixingCheck c = mixing_defect(g, sa, sb, m, cfg.tolerance);
    sets.record(c.pass, ratio(c.rhs, c.lhs));
  }
  tallies.push_back(sets);

  if (order <= 3000) {
    Tally spectrum{"operator_spectrum"};
    for (std::uint64_t i = 0; i < std::min<std::uint64_t>(a.trials, 100); ++i) {
      const GroupFunction f1 = random_function(g, rng);
      const OperatorSpectrum s = convolution_operator_svd(f1);
      double hs = 0.0;
      for (double x : s.full) hs += x * x;
      const double norm = f1.norm();
      const double allowed = norm / std::sqrt(static_cast<double>(m));
      const bool pass = std::abs(hs - norm * norm) <= cfg.tolerance * std::max(1.0, norm * norm) &&
                        s.restricted.front() <= allowed + cfg.tolerance;
      spectrum.record(pass, ratio(allowed, s.restricted.front()));
    }
    tallies.push_back(spectrum);
  }

  Tally products{"product_measure"};
  for (std::uint64_t i = 0; i < a.trials; ++i) {
    std::uniform_int_distribution<std::size_t> size(1, order);
    const auto sa = random_subset(g, size(rng), rng);
    const auto sb = random_subset(g, size(rng), rng);
    const ProductMeasure pm = product_measure_lower(g, sa, sb, m);
    products.record(pm.pass, pm.vacuous ? std::numeric_limits<double>::infinity()
                                        : to_double(pm.measure) / to_double(pm.bound));
  }
  tallies.push_back(products);

  for (const Rational eta : {Rational(1, 2), Rational(9, 10)}) {
    Tally triples{"triple_product_eta_" + to_string(eta)};
    for (std::uint64_t i = 0; i < a.trials; ++i) {
      const auto sa = random_subset(g, rng);
      const auto sb = random_subset(g, rng);
      const auto sc = random_subset(g, rng);
      const TripleDensity td = triple_density(g, sa, sb, sc);
      const auto holds = triple_lower_bound_holds(td, m, eta);
      if (!holds) continue;
      const Rational floor = (1 - eta) * td.product;
      triples.record(*holds, floor > 0 ? to_double(td.measure) / to_double(floor)
                                       : std::numeric_limits<double>::infinity());
    }
    tallies.push_back(triples);
  }

  Tally cubes{"cube_cover"};
  std::size_t min_size = 1;
  while (min_size <= order && (unsigned __int128)min_size * min_size * min_size * m <=
                                  (unsigned __int128)order * order * order) {
    ++min_size;
  }
  if (min_size <= order) {
    std::uniform_int_distribution<std::size_t> size(min_size, order);
    for (std::uint64_t i = 0; i < a.trials; ++i) {
      const CubeCover c = cube_cover_check(g, random_subset(g, size(rng), rng), m);
      cubes.record(c.pass, std::numeric_limits<double>::infinity());
    }
  }
  tallies.push_back(cubes);

  Json tests = Json::array();
  bool pass = true;
  for (const auto& tally : tallies) {
    tests.push_back(tally.json(cfg.seed));
    pass = pass && tally.failures == 0;
  }
  return Json{{"group", to_json(g.descriptor())}, {"m", m}, {"tests", tests}, {"pass", pass}};
}

std::vector<Ordinal> default_subgroup(const GroupTable& g) {
  const auto& d = g.descriptor();
  if (d.family == "sl" || d.family == "sp") return stabilizer_subgroup(g, StabilizerAction::Projective).members;
  if (d.family == "alt" || d.family == "sym" || d.family == "tree") return point_stabilizer(g, 0).members;
  if (d.family == "abelian" && !d.factors.empty()) {
    // Elements whose last coordinate is divisible by the smallest prime q of
    // the last factor: a subgroup of index q.
    const std::uint32_t last = d.factors.back();
    std::uint32_t q = 2;
    while (last % q != 0) ++q;
    std::vector<Ordinal> h;
    for (Ordinal x = 0; x < g.order(); ++x)
      if (g.encoding(x).back() % q == 0) h.push_back(x);
    return h;
  }
  // Cyclic subgroup of the first generator.
  std::vector<Ordinal> h = {g.identity()};
  if (!g.generators().empty()) {
    for (Ordinal x = g.generators().front(); x != g.identity(); x = g.mul(x, g.generators().front())) h.push_back(x);
  }
  std::sort(h.begin(), h.end());
  return h;
}

Json cmd_pf(const CommandArgs& a, const RunConfig& cfg) {
  const std::string& mode = a.mode;
  if (mode == "search") {
    const GroupTable g = build_group(a, cfg);
    const bool exact = g.order() <= kMaxExactSearchOrder;
    const SearchResult r = exact ? exact_max_product_free(g, cfg.node_budget) : greedy_product_free(g, cfg.seed);
    Json j = to_json(r, a.witness);
    j["group"] = to_json(g.descriptor());
    j["method"] = exact ? "branch_and_bound" : "greedy";
    j["seed"] = cfg.seed;
    j["product_free"] = verify_product_free(g, r.witness);
    j["density_at_most_half"] = r.density <= Rational(1, 2);
    j["pass"] = j["product_free"].get<bool>() && j["density_at_most_half"].get<bool>();
    return j;
  }
  if (mode == "coset") {
    const GroupTable g = build_group(a, cfg);
    const auto h = default_subgroup(g);
    const SearchResult r = coset_product_free(g, h);
    const auto index = static_cast<std::int64_t>(g.order() / h.size());
    Json j = to_json(r, a.witness);
    for (const char* key : {"optimal", "budget_exceeded", "nodes"}) j.erase(key);
    j["group"] = to_json(g.descriptor());
    j["subgroup_index"] = index;
    j["product_free"] = verify_product_free(g, r.witness);
    const BoundReport report = verify_bound("coset density", r.density, Rational(1, index), Relation::Equal,
                                            {"coset of a proper subgroup"});
    j["report"] = to_json(report);
    j["pass"] = j["product_free"].get<bool>() && report.pass;
    return j;
  }
  if (mode == "formula-abelian") {
    if (a.factors.empty()) throw UsageError("formula-abelian needs --factors");
    Json j{{"factors", a.factors}, {"value", rational_json(green_ruzsa_pf(a.factors))}};
    std::uint64_t order = 1;
    for (auto f : a.factors) order *= f;
    bool pass = true;
    if (order <= 64) {
      const BoundReport r = formula_vs_search(a.factors, cfg.node_budget);
      j["report"] = to_json(r);
      pass = r.pass;
    }
    j["pass"] = pass;
    return j;
  }
  if (mode == "formula-padic") return Json{{"p", require(a.p, "p")}, {"value", rational_json(pf_padic(a.p))}, {"pass", true}};
  if (mode == "formula-series") {
    return Json{{"p", require(a.p, "p")}, {"value", rational_json(pf_power_series(a.p))}, {"pass", true}};
  }
  if (mode == "formula-tree") {
    return Json{{"k", require(a.k, "k")}, {"interval", to_json(pf_bounds_tree(a.k))}, {"pass", true}};
  }
  if (mode == "formula-profinite") {
    if (a.family.empty()) throw UsageError("formula-profinite needs --family");
    Family family = parse_family(a.family);
    std::uint32_t k = a.k;
    if (family == Family::SL2) k = 2;
    return Json{{"family", std::string(to_string(family))},
                {"k", require(k, "k")},
                {"p", require(a.p, "p")},
                {"interval", to_json(pf_bounds_profinite(family, k, a.p))},
                {"pass", true}};
  }
  throw UsageError("unknown --mode '" + mode + "'");
}

Json cmd_tree(const CommandArgs& a, const RunConfig& cfg) {
  const std::uint32_t k = require(a.k, "k");
  if (a.depth < 1 || a.depth > 2) fail(ErrorKind::UnsupportedParameters, "depth must be 1 or 2");
  const auto formula = tree_order(k, a.depth);
  Json j{{"k", k}, {"depth", a.depth}};
  j["order_formula"] = formula ? Json(*formula) : Json(nullptr);
  bool pass = true;
  if (formula && *formula <= cfg.element_budget) {
    const GroupTable g = build_tree_level(k, a.depth, cfg.element_budget);
    j["order"] = g.order();
    j["enumerated"] = true;
    pass = pass && g.order() == *formula;
  } else {
    j["enumerated"] = false;
  }

  // F_1 = Alt_{k+1}; m(Alt_n) = n - 1 for n >= 6.
  const auto alt_order = tree_order(k, 1);
  if (alt_order && *alt_order <= cfg.element_budget) {
    const GroupTable f1 = build_alt(k + 1, cfg.element_budget);
    const ClassData cd = conjugacy_classes(f1);
    const std::uint64_t m = min_nontrivial_degree(character_table(f1, cd, cfg.seed));
    j["m_F1"] = m;
    if (k + 1 >= 6) {
      const bool ok = m == k;
      j["m_F1_matches"] = ok;
      pass = pass && ok;
    }
  } else {
    j["m_F1"] = nullptr;
  }

  if (k + 1 <= 12) {
    const InvariantScan scan = alt_invariant_subgroup_scan(build_even_weight_code(k + 1));
    j["code_scan"] = to_json(scan);
    if (k + 1 >= 7) {
      const bool ok = scan.min_rank && *scan.min_rank >= k - 1;
      j["code_scan"]["min_rank_at_least_k_minus_1"] = ok;
      pass = pass && ok;
    }
  }
  if (k >= 6) j["pf_interval"] = to_json(pf_bounds_tree(k));
  j["pass"] = pass;
  return j;
}

Json dispatch(const CommandArgs& a, const RunConfig& cfg);

std::string table_row(const std::string& command, const Json& args, const std::string& status) {
  std::ostringstream s;
  s << std::left << std::setw(10) << command << std::setw(54) << args.dump() + " " << status;
  return s.str();
}

CommandArgs args_from_json(const Json& j) {
  CommandArgs a;
  if (!j.is_object() || !j.contains("command")) throw UsageError("manifest entries need a \"command\" key");
  for (const auto& [key, value] : j.items()) {
    if (key == "command") a.command = value.get<std::string>();
    else if (key == "family") a.family = value.get<std::string>();
    else if (key == "k") a.k = value.get<std::uint32_t>();
    else if (key == "p") a.p = value.get<std::uint32_t>();
    else if (key == "n") a.n = value.get<std::uint32_t>();
    else if (key == "depth") a.depth = value.get<std::uint32_t>();
    else if (key == "factors") a.factors = value.get<std::vector<std::uint32_t>>();
    else if (key == "mode") a.mode = value.get<std::string>();
    else if (key == "trials") a.trials = value.get<std::uint64_t>();
    else if (key == "full") a.full = value.get<bool>();
    else if (key == "witness") a.witness = value.get<bool>();
    else throw UsageError("unknown manifest key '" + key + "'");
  }
  if (a.command == "report") throw UsageError("manifests cannot nest report");
  return a;
}

struct ReportOutcome {
  Json json;
  std::string table;
  int code = kExitOk;
};

ReportOutcome cmd_report(const CommandArgs& a, const RunConfig& cfg) {
  if (a.manifest.empty()) throw UsageError("report needs --manifest");
  std::ifstream in(a.manifest);
  if (!in) throw UsageError("cannot read manifest " + a.manifest);
  Json manifest;
  try {
    manifest = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!manifest.is_array()) throw UsageError("manifest must be a JSON array");

  ReportOutcome outcome;
  Json results = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(10) << "command" << std::setw(54) << "arguments" << "status\n";
  for (const auto& entry : manifest) {
    const CommandArgs sub = args_from_json(entry);
    Json result{{"command", sub.command}, {"arguments", entry}};
    std::string status;
    try {
      Json r = dispatch(sub, cfg);
      const bool pass = r.value("pass", false);
      result["result"] = std::move(r);
      status = pass ? "PASS" : "FAIL";
      if (!pass) outcome.code = std::max(outcome.code, static_cast<int>(kExitVerificationFailed));
    } catch (const Error& e) {
      result["error"] = std::string(to_string(e.kind()));
      result["detail"] = e.what();
      status = "ERROR " + std::string(to_string(e.kind()));
      outcome.code = std::max(outcome.code, exit_code_for(e.kind()));
    }
    table << table_row(sub.command, entry, status) << "\n";
    results.push_back(std::move(result));
  }
  outcome.json = Json{{"manifest", a.manifest}, {"results", results}, {"pass", outcome.code == kExitOk}};
  outcome.table = table.str();
  return outcome;
}

Json dispatch(const CommandArgs& a, const RunConfig& cfg) {
  if (a.command == "group") return cmd_group(a, cfg);
  if (a.command == "degrees") return cmd_degrees(a, cfg);
  if (a.command == "bounds") return cmd_bounds(a, cfg);
  if (a.command == "mixing") return cmd_mixing(a, cfg);
  if (a.command == "pf") return cmd_pf(a, cfg);
  if (a.command == "tree") return cmd_tree(a, cfg);
  throw UsageError("unknown command '" + a.command + "'");
}

void apply_config_file(const std::string& path, RunConfig& cfg, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  const auto unset = [&](const char* flag) { return app.count(flag) == 0; };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "seed") {
        if (unset("--seed")) cfg.seed = value.get<std::uint64_t>();
      } else if (key == "tolerance") {
        if (unset("--tolerance")) cfg.tolerance = value.get<double>();
      } else if (key == "workers") {
        if (unset("--workers")) cfg.workers = value.get<unsigned>();
      } else if (key == "element_budget") {
        if (unset("--element-budget")) cfg.element_budget = value.get<std::uint64_t>();
      } else if (key == "node_budget") {
        if (unset("--node-budget")) cfg.node_budget = value.get<std::uint64_t>();
      } else if (key == "output") {
        if (unset("--output")) cfg.output = value.get<std::string>();
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

void add_group_options(CLI::App* sub, CommandArgs& a) {
  sub->add_option("--family", a.family, "sl, sl2, slk, sp, sp2k, alt, sym, tree, abelian, quaternion");
  sub->add_option("--k", a.k, "rank, or degree for alt/sym, or branching for tree");
  sub->add_option("--p", a.p, "prime");
  sub->add_option("--n", a.n, "exponent of the modulus p^n")->capture_default_str();
  sub->add_option("--depth", a.depth, "tree depth (1 or 2)")->capture_default_str();
  sub->add_option("--factors", a.factors, "invariant factors of an abelian group")->delimiter(',');
}

void emit(const Json& body, const RunConfig& cfg, std::ostream& out) {
  Json j = body;
  j["schema"] = kSchema;
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw UsageError("cannot write " + cfg.output);
  file << text;
}

void emit_error(std::string_view kind, const std::string& detail, std::ostream& out) {
  out << Json{{"schema", kSchema}, {"error", std::string(kind)}, {"detail", detail}}.dump(2) << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quotients of profinite groups: degrees, product-free sets and mixing checks", "qrgroups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  CommandArgs args;
  std::string config_path;
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "norm comparison tolerance")->capture_default_str();
  app.add_option("--workers", cfg.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--element-budget", cfg.element_budget, "largest group to enumerate")->capture_default_str();
  app.add_option("--node-budget", cfg.node_budget, "branch-and-bound node limit")->capture_default_str();
  app.add_option("--output", cfg.output, "write JSON here instead of stdout");
  app.add_option("--config", config_path, "JSON file with the same keys as the flags");

  auto* group = app.add_subcommand("group", "enumerate a group and check its order");
  add_group_options(group, args);
  auto* degrees = app.add_subcommand("degrees", "character degrees, m(G) and m_f(G)");
  add_group_options(degrees, args);
  degrees->add_flag("--full", args.full, "include character values");
  auto* bounds = app.add_subcommand("bounds", "compare m and m_f with the degree bounds");
  add_group_options(bounds, args);
  auto* mixing = app.add_subcommand("mixing", "randomized mixing-inequality suite");
  add_group_options(mixing, args);
  mixing->add_option("--trials", args.trials, "trials per test")->capture_default_str();
  auto* pf = app.add_subcommand("pf", "product-free sets and formulas");
  add_group_options(pf, args);
  pf->add_option("--mode", args.mode, "search, coset, formula-abelian, formula-padic, formula-series, "
                                      "formula-tree, formula-profinite")
      ->required();
  pf->add_flag("--witness", args.witness, "include the witness set");
  auto* tree = app.add_subcommand("tree", "tree quotients and the even-weight code scan");
  tree->add_option("--k", args.k, "branching parameter")->required();
  tree->add_option("--depth", args.depth, "1 or 2")->capture_default_str();
  auto* report = app.add_subcommand("report", "run every command in a manifest");
  report->add_option("--manifest", args.manifest, "JSON array of command objects")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit_error("UsageError", e.what(), out);
    return kExitUsage;
  }
  args.command = app.get_subcommands().front()->get_name();

  try {
    if (!config_path.empty()) apply_config_file(config_path, cfg, app);
    if (cfg.workers == 0) throw UsageError("--workers must be positive");
    if (args.command == "report") {
      const ReportOutcome r = cmd_report(args, cfg);
      emit(r.json, cfg, out);
      (cfg.output.empty() ? err : out) << r.table;
      return r.code;
    }
    const Json result = dispatch(args, cfg);
    emit(result, cfg, out);
    return result.value("pass", false) ? kExitOk : kExitVerificationFailed;
  } catch (const UsageError& e) {
    emit_error("UsageError", e.what(), out);
    return kExitUsage;
  } catch (const Error& e) {
    emit_error(to_string(e.kind()), e.what(), out);
    return exit_code_for(e.kind());
  } catch (const Json::exception& e) {
    emit_error("UsageError", e.what(), out);
    return kExitUsage;
  }
}

}  // namespace qrg
