#include "ncalg/cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncalg/diamond.hpp"
#include "ncalg/errors.hpp"
#include "ncalg/obstruction.hpp"
#include "ncalg/parser.hpp"
#include "ncalg/presentation.hpp"
#include "ncalg/sext.hpp"
#include "ncalg/witness.hpp"

namespace ncalg::cli {

Environment Environment::from_process() {
  const char* strict = std::getenv("CI_STRICT");
  return Environment{strict != nullptr && std::string(strict) == "1"};
}

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Output {
  std::ostream& out;
  bool pretty = false;
};

void render_pretty(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        render_pretty(value, out, indent + 1);
      } else {
        out << pad << key << ": " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_structured() && !value.empty()) {
        out << pad << "-\n";
        render_pretty(value, out, indent + 1);
      } else {
        out << pad << "- " << scalar(value) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

int emit(const Output& o, const std::string& command, Json inputs, bool verdict, Json details,
         std::optional<std::uint64_t> seed) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["verdict"] = verdict;
  doc["details"] = std::move(details);
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  doc["version"] = kVersion;
  if (o.pretty) render_pretty(doc, o.out, 0);
  else o.out << doc.dump(2) << "\n";
  return verdict ? kOk : kViolation;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed, const Environment& env) {
  if (seed) return *seed;
  if (env.ci_strict) throw UsageError("--seed is required when CI_STRICT=1");
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

Json strings(const std::vector<NcPoly>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(p.to_string());
  return arr;
}

Json rules_json(const RewriteSystem& sys) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < sys.rules().size(); ++i) arr.push_back(sys.format_rule(i));
  return arr;
}

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.format()) rows.push_back(row);
  return rows;
}

std::string rational(const mpq_class& q) { return q.get_str(); }

Json defect_json(const DefectReport& r) {
  Json d;
  d["n"] = r.n;
  d["ranks"] = {{"x", r.rank_x}, {"z", r.rank_z}, {"yz", r.rank_yz}, {"T", r.rank_t}, {"S", r.rank_s}};
  d["normalized"] = {{"x", rational(r.normalized(r.rank_x))},   {"z", rational(r.normalized(r.rank_z))},
                     {"yz", rational(r.normalized(r.rank_yz))}, {"T", rational(r.normalized(r.rank_t))},
                     {"S", rational(r.normalized(r.rank_s))}};
  d["margin"] = r.margin;
  d["alpha_window"] = {{"lower", rational(r.alpha_lower)}, {"upper", rational(r.alpha_upper)}};
  d["regime_feasible"] = r.regime_feasible;
  return d;
}

// ---------------------------------------------------------------- rewrite

int cmd_nf(const Output& o, const std::string& path, const std::string& expr, bool json) {
  const Presentation pres = load_presentation(path);
  const NcPoly p = parse_poly(expr, pres.system.algebra());
  const NcPoly nf = normal_form(p, pres.system);
  if (!json) {
    o.out << nf.to_string() << "\n";
    return kOk;
  }
  return emit(o, "nf", {{"presentation", path}, {"expr", expr}}, true,
              {{"input", p.to_string()}, {"normal_form", nf.to_string()}}, std::nullopt);
}

int cmd_confluence(const Output& o, const std::string& path) {
  const Presentation pres = load_presentation(path);
  const RewriteSystem& sys = pres.system;
  const ConfluenceReport report = check_confluence(sys);
  Json ambs = Json::array();
  for (const auto& r : report.ambiguities) {
    Json a;
    a["kind"] = to_string(r.ambiguity.kind);
    a["rule_a"] = r.ambiguity.rule_a;
    a["rule_b"] = r.ambiguity.rule_b;
    a["word"] = sys.alphabet().format(r.ambiguity.word);
    a["offset"] = r.ambiguity.offset;
    a["reduct_a"] = r.reduct_a.to_string();
    a["reduct_b"] = r.reduct_b.to_string();
    a["trace_a"] = strings(r.trace_a);
    a["trace_b"] = strings(r.trace_b);
    a["normal_a"] = r.normal_a.to_string();
    a["normal_b"] = r.normal_b.to_string();
    a["resolvable"] = r.resolvable;
    ambs.push_back(std::move(a));
  }
  Json details;
  details["rules"] = rules_json(sys);
  details["ambiguity_count"] = report.ambiguities.size();
  details["ambiguities"] = std::move(ambs);
  details["overall"] = report.overall;
  return emit(o, "confluence", {{"presentation", path}}, report.overall, std::move(details), std::nullopt);
}

int cmd_complete(const Output& o, const std::string& path, std::size_t max_rules, std::size_t max_degree) {
  const Presentation pres = load_presentation(path);
  Json inputs = {{"presentation", path}, {"max_new_rules", max_rules}, {"max_degree", max_degree}};
  try {
    const CompletionResult result = complete(pres.system, max_rules, max_degree);
    const bool done = result.status == CompletionResult::Status::Completed;
    Json details;
    details["status"] = done ? "completed" : "exceeded";
    details["rules_added"] = result.rules_added;
    details["rules"] = rules_json(result.system);
    return emit(o, "complete", std::move(inputs), done, std::move(details), std::nullopt);
  } catch (const QuotientCollapse& e) {
    return emit(o, "complete", std::move(inputs), false, {{"status", "collapsed"}, {"reason", e.what()}},
                std::nullopt);
  }
}

int cmd_words(const Output& o, const std::string& path, std::size_t max_degree) {
  const Presentation pres = load_presentation(path);
  Json counts = Json::array();
  Json words = Json::object();
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const auto ws = enumerate_normal_words(pres.system, d);
    counts.push_back(ws.size());
    Json list = Json::array();
    for (const auto& w : ws) list.push_back(pres.system.alphabet().format(w));
    words[std::to_string(d)] = std::move(list);
  }
  return emit(o, "words", {{"presentation", path}, {"max_degree", max_degree}}, true,
              {{"counts", std::move(counts)}, {"words", std::move(words)}}, std::nullopt);
}

int cmd_witness(const Output& o, const std::string& path) {
  const Presentation pres = load_presentation(path);
  if (!pres.witness) throw UsageError(path + " has no witness block");
  const WitnessReport report = verify_lemma_witness(pres.system, *pres.witness);
  const LemmaWitness& w = *pres.witness;
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"check", c.name},
                      {"expect", c.expect_zero ? "zero" : "nonzero"},
                      {"normal_form", c.normal_form.to_string()},
                      {"passed", c.passed}});
  Json details;
  details["witness"] = {{"x", w.x.to_string()}, {"y", w.y.to_string()}, {"z", w.z.to_string()},
                        {"a", w.a.to_string()}, {"b", w.b.to_string()}};
  details["checks"] = std::move(checks);
  return emit(o, "witness", {{"presentation", path}}, report.verdict, std::move(details), std::nullopt);
}

int cmd_identity(const Output& o, const Environment& env, const std::string& path, std::size_t trials,
                 std::size_t max_deg, std::optional<std::uint64_t> seed_opt) {
  const std::uint64_t seed = resolve_seed(seed_opt, env);
  const Presentation pres = load_presentation(path);
  const IdentityResult result = verify_identity_comm3(pres.system, trials, max_deg, seed);
  Json details;
  details["identity"] = "[X1,Y1]*[X2,Y2]*[X3,Y3] = 0";
  details["trials_run"] = result.trials;
  details["holds"] = result.holds();
  if (result.counterexample) {
    const auto& c = *result.counterexample;
    static const char* names[] = {"X1", "Y1", "X2", "Y2", "X3", "Y3"};
    Json subst;
    for (std::size_t i = 0; i < 6; ++i) subst[names[i]] = c.substitution[i].to_string();
    details["counterexample"] = {{"trial", c.trial}, {"substitution", std::move(subst)}, {"value", c.value.to_string()}};
  }
  return emit(o, "identity", {{"presentation", path}, {"trials", trials}, {"max_deg", max_deg}}, result.holds(),
              std::move(details), seed);
}

// ---------------------------------------------------------------- ranklab

struct RankTrialOutcome {
  long long margin;
  Json witness;  // matrices, filled only on violation
};

RankTrialOutcome rank_trial(const std::string& check, const FieldSpec& field, std::size_t n, Rng& rng) {
  auto draw = [&] {
    const auto r = static_cast<std::size_t>(rng.between(0, static_cast<long long>(n)));
    return random_matrix(field, n, r, rng);
  };
  if (check == "intersection") {
    const ExactMatrix x = draw(), z = draw(), b = draw();
    const std::size_t dim = image_intersection_dim(x, z);
    const ExactMatrix basis = intersection_basis(x, z);
    bool ok = dim == image_intersection_dim(z, x) && dim == exact_rank(basis) && dim == basis.cols();
    ok = ok && exact_rank(x.hconcat(basis)) == exact_rank(x) && exact_rank(z.hconcat(basis)) == exact_rank(z);
    // Z' = XB + S: the part of Im Z' outside Im X is at most rank S.
    const ExactMatrix s = draw();
    const ExactMatrix zp = x * b + s;
    const long long margin = static_cast<long long>(image_intersection_dim(zp, x)) -
                             (static_cast<long long>(exact_rank(zp)) - static_cast<long long>(exact_rank(s)));
    if (ok && margin >= 0) return {margin, nullptr};
    return {ok ? margin : -1, {{"X", matrix_json(x)}, {"Z", matrix_json(z)}, {"B", matrix_json(b)}, {"S", matrix_json(s)}}};
  }
  const ExactMatrix x = draw(), y = draw(), a = draw(), b = draw();
  // Half of the trials plant Z = XB + (low-rank S) so the defects are small.
  ExactMatrix z = rng.below(2) == 0 ? draw() : x * b + random_matrix(field, n, rng.below(n / 2 + 1), rng);
  long long margin;
  if (check == "claim") {
    const ClaimCheck c = claim_bound_check(x, y, z, b);
    margin = c.rhs - c.lhs;
  } else {
    margin = master_bound_check(x, y, z, a, b).margin;
  }
  if (margin >= 0) return {margin, nullptr};
  return {margin,
          {{"X", matrix_json(x)}, {"Y", matrix_json(y)}, {"Z", matrix_json(z)}, {"A", matrix_json(a)}, {"B", matrix_json(b)}}};
}

int cmd_fuzz_rank(const Output& o, const Environment& env, const std::string& field_text, std::size_t n,
                  std::size_t trials, std::optional<std::uint64_t> seed_opt, const std::string& check) {
  const std::uint64_t seed = resolve_seed(seed_opt, env);
  const FieldSpec field = FieldSpec::parse(field_text);
  if (n == 0) throw UsageError("--n must be positive");
  std::size_t violations = 0;
  std::optional<long long> min_margin;
  Json first_violation = nullptr;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    RankTrialOutcome r = rank_trial(check, field, n, rng);
    min_margin = min_margin ? std::min(*min_margin, r.margin) : r.margin;
    if (!r.witness.is_null()) {
      ++violations;
      if (first_violation.is_null()) first_violation = {{"trial", t}, {"matrices", std::move(r.witness)}};
    }
  }
  Json details;
  details["check"] = check;
  details["trials"] = trials;
  details["violations"] = violations;
  details["min_margin"] = min_margin ? Json(*min_margin) : Json(nullptr);
  if (!first_violation.is_null()) details["first_violation"] = std::move(first_violation);
  return emit(o, "fuzz-rank", {{"field", field.to_string()}, {"n", n}, {"trials", trials}, {"check", check}},
              violations == 0, std::move(details), seed);
}

int cmd_probe(const Output& o, const Environment& env, const std::string& path, const std::string& assignment_path,
              std::size_t n, std::size_t trials, std::optional<std::uint64_t> seed_opt) {
  const Presentation pres = load_presentation(path);
  if (!pres.witness) throw UsageError(path + " has no witness block");
  if (!assignment_path.empty()) {
    const Assignment assignment = load_assignment(assignment_path, pres.system);
    const DefectReport r = obstruction_probe(pres.system, *pres.witness, assignment);
    return emit(o, "probe", {{"presentation", path}, {"assignment", assignment_path}}, true, defect_json(r),
                std::nullopt);
  }
  if (n == 0) throw UsageError("probe needs an assignment file or --n with --trials");
  const std::uint64_t seed = resolve_seed(seed_opt, env);
  std::optional<long long> min_margin;
  std::size_t feasible = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    const DefectReport r = obstruction_probe(pres.system, *pres.witness, random_assignment(pres.system, n, rng));
    min_margin = min_margin ? std::min(*min_margin, r.margin) : r.margin;
    if (r.regime_feasible) ++feasible;
  }
  Json details;
  details["trials"] = trials;
  details["min_margin"] = min_margin ? Json(*min_margin) : Json(nullptr);
  details["regime_feasible_count"] = feasible;
  return emit(o, "probe", {{"presentation", path}, {"n", n}, {"trials", trials}}, feasible == 0, std::move(details),
              seed);
}

// ---------------------------------------------------------------- series

AlgebraPtr series_algebra(const std::string& field_text) {
  return make_algebra(FieldSpec::parse(field_text), std::vector<std::string>{"x", "y"});
}

int cmd_quasi_inverse(const Output& o, const Environment& env, const std::string& field_text, std::size_t cap,
                      const std::string& expr, std::size_t trials, std::optional<std::uint64_t> seed_opt) {
  const AlgebraPtr algebra = series_algebra(field_text);
  Json inputs = {{"field", algebra->field.to_string()}, {"trunc", cap}};
  if (!expr.empty()) {
    inputs["expr"] = expr;
    const TruncSeries f(parse_poly(expr, algebra), cap);
    const TruncSeries g = quasi_inverse(f);
    const bool left = g * f == f + g, right = f * g == f + g;
    return emit(o, "series quasi-inverse", std::move(inputs), left && right,
                {{"f", f.to_string()}, {"g", g.to_string()}, {"gf = f + g", left}, {"fg = f + g", right}}, std::nullopt);
  }
  const std::uint64_t seed = resolve_seed(seed_opt, env);
  inputs["trials"] = trials;
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    const TruncSeries f = random_radical_series(algebra, cap, rng);
    const TruncSeries g = quasi_inverse(f);
    if (!(g * f == f + g && f * g == f + g && circle(f, g).is_zero())) ++failures;
  }
  return emit(o, "series quasi-inverse", std::move(inputs), failures == 0,
              {{"trials", trials}, {"failures", failures}}, seed);
}

int cmd_sfprobe(const Output& o, const Environment& env, const std::string& field_text, std::size_t n, std::size_t cap,
                std::size_t trials, std::optional<std::uint64_t> seed_opt) {
  const std::uint64_t seed = resolve_seed(seed_opt, env);
  const AlgebraPtr algebra = series_algebra(field_text);
  std::size_t confirmed = 0;
  Json violation = nullptr;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    const SeriesMatrix x = random_unipotent(algebra, n, cap, rng);
    const SeriesMatrix y = neumann_inverse(x);
    const DirectFinitenessResult r = stable_finiteness_probe(x, y);
    if (r.confirmed) ++confirmed;
    else if (violation.is_null()) violation = {{"trial", t}, {"X", x.format_rows()}, {"Y", y.format_rows()}, {"YX", r.yx->format_rows()}};
  }
  Json details = {{"trials", trials}, {"confirmed_directly_finite", confirmed}};
  if (!violation.is_null()) details["violation"] = std::move(violation);
  return emit(o, "series sfprobe", {{"field", algebra->field.to_string()}, {"n", n}, {"trunc", cap}, {"trials", trials}},
              confirmed == trials, std::move(details), seed);
}

int cmd_sext_demo(const Output& o, const Environment& env, const std::string& field_text, std::size_t cap,
                  std::size_t trials, std::optional<std::uint64_t> seed_opt) {
  const std::uint64_t seed = resolve_seed(seed_opt, env);
  const AlgebraPtr algebra = series_algebra(field_text);
  Rng rng(seed);
  const auto m = static_cast<std::size_t>(rng.between(1, 3));
  std::vector<SExtElement> u, v;
  for (std::size_t i = 0; i < m; ++i) {
    u.push_back(random_sext(algebra, cap, rng, true));
    v.push_back(random_sext(algebra, cap, rng, true));
  }
  const CollapseReplay replay = replay_collapse(algebra, cap, u, v);

  Json instance = {{"m", m}, {"u", Json::array()}, {"v", Json::array()}};
  for (std::size_t i = 0; i < m; ++i) {
    instance["u"].push_back(u[i].to_string());
    instance["v"].push_back(v[i].to_string());
  }
  Json steps = Json::array();
  for (const auto& s : replay.steps) steps.push_back({{"step", s.label}, {"value", s.value}, {"holds", s.holds}});

  // Ring checks on random triples of S.
  const SExtElement z = SExtElement::z(algebra, cap);
  const bool z_squared_zero = s_ext_mul(z, z) == SExtElement::zero(algebra, cap);
  std::size_t assoc_failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng trial_rng = Rng::for_trial(seed, t);
    const SExtElement a = random_sext(algebra, cap, trial_rng, false);
    const SExtElement b = random_sext(algebra, cap, trial_rng, false);
    const SExtElement c = random_sext(algebra, cap, trial_rng, false);
    if (!(s_ext_mul(s_ext_mul(a, b), c) == s_ext_mul(a, s_ext_mul(b, c)))) ++assoc_failures;
  }

  Json details;
  details["instance"] = std::move(instance);
  details["steps"] = std::move(steps);
  details["z_squared_zero"] = z_squared_zero;
  details["associativity"] = {{"trials", trials}, {"failures", assoc_failures}};
  return emit(o, "series sext-demo", {{"field", algebra->field.to_string()}, {"trunc", cap}, {"trials", trials}},
              replay.verdict && z_squared_zero && assoc_failures == 0, std::move(details), seed);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Diamond-lemma rewriting, truncated series and exact-rank checks for noncommutative algebras", "ncalg"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable report instead of JSON");
  app.set_version_flag("--version", kVersion);

  std::string pres_path, expr, assignment_path;
  bool json = false;
  std::optional<std::uint64_t> seed;

  auto* nf = app.add_subcommand("nf", "Print the normal form of an expression");
  nf->add_option("presentation", pres_path, "Presentation file")->required();
  nf->add_option("expr", expr, "Expression")->required();
  nf->add_flag("--json", json, "Emit a report document");

  auto* confluence = app.add_subcommand("confluence", "Check every ambiguity of the rewrite system");
  confluence->add_option("presentation", pres_path)->required();

  std::size_t max_rules = 16, max_degree = 8;
  auto* completion = app.add_subcommand("complete", "Critical-pair completion with budgets");
  completion->add_option("presentation", pres_path)->required();
  completion->add_option("--max-rules", max_rules, "Maximum number of added rules")->capture_default_str();
  completion->add_option("--max-degree", max_degree, "Maximum lhs degree of an added rule")->capture_default_str();

  std::size_t word_degree = 6;
  auto* words = app.add_subcommand("words", "Enumerate normal words up to a degree");
  words->add_option("presentation", pres_path)->required();
  words->add_option("--degree", word_degree, "Largest degree")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "Verify the witness block");
  witness->add_option("presentation", pres_path)->required();

  std::size_t id_trials = 200, id_max_deg = 4;
  auto* identity = app.add_subcommand("identity", "Random check of [X1,Y1][X2,Y2][X3,Y3] = 0");
  identity->add_option("presentation", pres_path)->required();
  identity->add_option("--trials", id_trials)->capture_default_str();
  identity->add_option("--max-deg", id_max_deg)->capture_default_str();
  identity->add_option("--seed", seed);

  std::string fuzz_field = "Fp:101", check = "master";
  std::size_t fuzz_n = 8, fuzz_trials = 1000;
  auto* fuzz = app.add_subcommand("fuzz-rank", "Fuzz the rank inequalities");
  fuzz->add_option("--field", fuzz_field)->capture_default_str();
  fuzz->add_option("--n", fuzz_n)->capture_default_str();
  fuzz->add_option("--trials", fuzz_trials)->capture_default_str();
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--check", check)->capture_default_str()->check(CLI::IsMember({"claim", "master", "intersection"}));

  std::size_t probe_n = 0, probe_trials = 100;
  auto* probe = app.add_subcommand("probe", "Defect report of a matrix assignment for the witness");
  probe->add_option("presentation", pres_path)->required();
  probe->add_option("assignment", assignment_path, "Assignment JSON (omit for a random campaign)");
  probe->add_option("--n", probe_n, "Matrix size of random assignments");
  probe->add_option("--trials", probe_trials, "Number of random assignments")->capture_default_str();
  probe->add_option("--seed", seed);

  std::string series_field = "Q";
  auto* series = app.add_subcommand("series", "Truncated power-series machinery");
  series->require_subcommand(1);
  series->add_option("--field", series_field)->capture_default_str();

  std::size_t qi_cap = 8, qi_trials = 100;
  auto* qi = series->add_subcommand("quasi-inverse", "Quasi-inverse of a series, or random trials");
  qi->add_option("--expr", expr, "Series with zero constant term over x, y");
  qi->add_option("--trunc", qi_cap)->capture_default_str();
  qi->add_option("--trials", qi_trials)->capture_default_str();
  qi->add_option("--seed", seed);

  std::size_t sf_n = 3, sf_cap = 4, sf_trials = 100;
  auto* sf = series->add_subcommand("sfprobe", "XY = I implies YX = I over truncated matrices");
  sf->add_option("--n", sf_n)->capture_default_str();
  sf->add_option("--trunc", sf_cap)->capture_default_str();
  sf->add_option("--trials", sf_trials)->capture_default_str();
  sf->add_option("--seed", seed);

  std::size_t sd_cap = 8, sd_trials = 300;
  auto* sd = series->add_subcommand("sext-demo", "Replay the x*z = f*x*z collapse in S = R + R^1 z");
  sd->add_option("--trunc", sd_cap)->capture_default_str();
  sd->add_option("--trials", sd_trials, "Random associativity triples")->capture_default_str();
  sd->add_option("--seed", seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Output o{out, pretty};
  try {
    if (*nf) return cmd_nf(o, pres_path, expr, json);
    if (*confluence) return cmd_confluence(o, pres_path);
    if (*completion) return cmd_complete(o, pres_path, max_rules, max_degree);
    if (*words) return cmd_words(o, pres_path, word_degree);
    if (*witness) return cmd_witness(o, pres_path);
    if (*identity) return cmd_identity(o, env, pres_path, id_trials, id_max_deg, seed);
    if (*fuzz) return cmd_fuzz_rank(o, env, fuzz_field, fuzz_n, fuzz_trials, seed, check);
    if (*probe) return cmd_probe(o, env, pres_path, assignment_path, probe_n, probe_trials, seed);
    if (*qi) return cmd_quasi_inverse(o, env, series_field, qi_cap, expr, qi_trials, seed);
    if (*sf) return cmd_sfprobe(o, env, series_field, sf_n, sf_cap, sf_trials, seed);
    if (*sd) return cmd_sext_demo(o, env, series_field, sd_cap, sd_trials, seed);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MismatchError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace ncalg::cli
