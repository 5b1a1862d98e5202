// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncalg/cli.hpp"
#include "ncalg/diamond.hpp"
#include "ncalg/obstruction.hpp"
#include "ncalg/sext.hpp"
#include "ncalg/witness.hpp"
#include "support.hpp"

using namespace ncalg;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, cli::Environment{true});
  return {code, out.str()};
}

Outcome irving_confluence() {
  const CliRun r = cli_run({"confluence", testing::preset("irving.pres")});
  const Json d = Json::parse(r.out);
  const Json& ambs = d["details"]["ambiguities"];
  bool ok = r.code == 0 && d["verdict"] == true && d["details"]["overall"] == true && ambs.size() == 2;
  ok = ok && ambs[0]["word"] == "x*x*x" && ambs[1]["word"] == "y*x*y*x*y";
  for (const auto& a : ambs) ok = ok && a["resolvable"] == true && a["normal_a"] == "0" && a["normal_b"] == "0";
  ok = ok && ambs[1]["reduct_a"] == "x*x*y" && ambs[1]["reduct_b"] == "y*x*x";
  return {ok, "ambiguities=" + std::to_string(ambs.size()) + ", yxyxy -> " + ambs[1]["reduct_a"].get<std::string>() +
                  " | " + ambs[1]["reduct_b"].get<std::string>() + " -> 0"};
}

Outcome normal_word_growth() {
  const Presentation p = load_presentation(testing::preset("irving.pres"));
  const std::vector<std::size_t> expected{2, 3, 4, 4, 4, 4};
  std::string counts;
  bool ok = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto words = enumerate_normal_words(p.system, n);
    std::vector<std::string> got;
    for (const auto& w : words) {
      std::string s;
      for (auto l : w) s += p.system.alphabet().name(l);
      got.push_back(s);
    }
    ok = ok && words.size() == expected[n - 1] && got == oracle::avoiding_words(n, {"xx", "yxy"});
    counts += (n > 1 ? "," : "") + std::to_string(words.size());
  }
  return {ok, "counts " + counts};
}

Outcome pi_identity() {
  bool ok = true;
  std::string detail;
  for (const char* field : {"Q", "Fp 7"}) {
    const IdentityResult r = verify_identity_comm3(testing::irving(field).system, 200, 4, 42);
    ok = ok && r.holds() && r.trials == 200;
    detail += std::string(field) + (r.holds() ? ": holds " : ": COUNTEREXAMPLE ");
  }
  return {ok, detail + "(200 trials each, max_deg 4, seed 42)"};
}

Outcome witness_checks() {
  const CliRun r = cli_run({"witness", testing::preset("irving.pres")});
  const Json d = Json::parse(r.out);
  bool ok = r.code == 0 && d["verdict"] == true && d["details"]["witness"]["z"] == "x*y*x" &&
            d["details"]["witness"]["a"] == "y" && d["details"]["witness"]["b"] == "y*x";
  std::size_t passed = 0;
  for (const auto& c : d["details"]["checks"]) passed += c["passed"] == true;
  ok = ok && passed == d["details"]["checks"].size();
  return {ok, std::to_string(passed) + "/" + std::to_string(d["details"]["checks"].size()) +
                  " checks (x=yxa, z=xb, yz=0, x!=0, z!=0)"};
}

Outcome rank_inequalities() {
  bool ok = true;
  long long min_margin = 1LL << 40;
  std::size_t runs = 0;
  auto fuzz = [&](const std::string& field, std::size_t n, std::size_t trials, const std::string& check) {
    const CliRun r = cli_run({"fuzz-rank", "--field", field, "--n", std::to_string(n), "--trials",
                              std::to_string(trials), "--seed", "1", "--check", check});
    const Json d = Json::parse(r.out);
    ok = ok && r.code == 0 && d["details"]["violations"] == 0 && d["details"]["trials"] == trials;
    if (!d["details"]["min_margin"].is_null()) {
      ok = ok && d["details"]["min_margin"].get<long long>() >= 0;
      min_margin = std::min(min_margin, d["details"]["min_margin"].get<long long>());
    }
    ++runs;
  };
  for (const char* check : {"claim", "master"}) {
    for (std::size_t n : {4u, 8u, 12u}) fuzz("Fp:101", n, 1000, check);
    fuzz("Q", 6, 200, check);
  }

  // Intersection formula against brute-force spans over F2, every pair for n <= 3.
  std::size_t pairs = 0, mismatches = 0;
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t total = 1u << (n * n), row_mask = (1u << n) - 1;
    for (std::uint32_t bx = 0; bx < total; ++bx) {
      oracle::F2Matrix x(n);
      for (int i = 0; i < n; ++i) x[i] = (bx >> (i * n)) & row_mask;
      const ExactMatrix X = testing::from_f2(x, n);
      for (std::uint32_t bz = 0; bz < total; ++bz) {
        oracle::F2Matrix z(n);
        for (int i = 0; i < n; ++i) z[i] = (bz >> (i * n)) & row_mask;
        ++pairs;
        if (image_intersection_dim(X, testing::from_f2(z, n)) != static_cast<std::size_t>(oracle::intersection_dim_f2(x, z, n)))
          ++mismatches;
      }
    }
  }
  ok = ok && mismatches == 0;
  return {ok, std::to_string(runs) + " fuzz runs, min margin " + std::to_string(min_margin) + "; F2 intersection " +
                  std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome obstruction_probe_campaign() {
  const Presentation p = testing::irving("Fp 101");
  bool ok = true;
  long long min_margin = 1LL << 40;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = Rng::for_trial(3, t);
    const DefectReport r = obstruction_probe(p.system, *p.witness, random_assignment(p.system, 12, rng));
    const std::size_t worst = std::max({r.rank_yz, r.rank_t, r.rank_s});
    // No alpha > 0 with min(rank_x, rank_z) > alpha n and 4 max(defects) < alpha n.
    const bool infeasible = std::min(r.rank_x, r.rank_z) <= 4 * worst;
    ok = ok && r.n == 12 && r.margin >= 0 && !r.regime_feasible && infeasible;
    min_margin = std::min(min_margin, r.margin);
  }
  return {ok, "100 assignments at n=12 over Fp:101, min margin " + std::to_string(min_margin) + ", all infeasible"};
}

Outcome quasi_inverse_check() {
  const AlgebraPtr alg = make_algebra(FieldSpec::rationals(), {"x", "y"});
  Rng rng(7);
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    const TruncSeries f = random_radical_series(alg, 6, rng);
    const TruncSeries g = quasi_inverse(f);
    ok = ok && g * f == f + g && f * g == f + g;
  }
  const TruncSeries g = quasi_inverse(TruncSeries(testing::poly(alg, "x"), 3));
  ok = ok && g == TruncSeries(testing::poly(alg, "-x - x*x - x*x*x"), 3);
  return {ok, "100 random series at cap 6; f=x, cap 3 gives g=" + g.to_string()};
}

Outcome s_extension() {
  const CliRun r = cli_run({"series", "sext-demo", "--trunc", "8", "--trials", "300", "--seed", "8"});
  const Json d = Json::parse(r.out);
  bool ok = r.code == 0 && d["verdict"] == true && d["details"]["z_squared_zero"] == true &&
            d["details"]["associativity"]["trials"] == 300 && d["details"]["associativity"]["failures"] == 0;
  const Json& steps = d["details"]["steps"];
  for (const auto& s : steps) ok = ok && s["holds"] == true;
  ok = ok && steps.size() == 10;
  // The explicit unit instance u = v = 1: f = y, and the replay ends at xz = 0.
  const AlgebraPtr alg = make_algebra(FieldSpec::rationals(), {"x", "y"});
  const SExtElement one = SExtElement::scalar(alg->field.one(), 8, alg);
  const CollapseReplay unit = replay_collapse(alg, 8, {one}, {one});
  ok = ok && unit.verdict && unit.f == TruncSeries(testing::poly(alg, "y"), 8);
  return {ok, "z^2=0, 300 associativity triples, " + std::to_string(steps.size()) + " collapse steps hold"};
}

Outcome stable_finiteness() {
  const AlgebraPtr alg = make_algebra(FieldSpec::rationals(), {"x", "y"});
  bool ok = true;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng = Rng::for_trial(9, t);
    const SeriesMatrix x = random_unipotent(alg, 3, 4, rng);
    const SeriesMatrix y = neumann_inverse(x);
    ok = ok && (x * y).is_identity() && (y * x).is_identity() && stable_finiteness_probe(x, y).confirmed;
  }
  return {ok, "100 pairs at n=3, cap 4 confirmed directly finite"};
}

Outcome determinism() {
  const std::string irving = testing::preset("irving.pres"), irving_fp = testing::preset("irving_fp.pres");
  const std::vector<std::vector<std::string>> commands{
      {"identity", irving, "--trials", "50", "--seed", "17"},
      {"fuzz-rank", "--n", "6", "--trials", "100", "--seed", "17", "--check", "master"},
      {"fuzz-rank", "--field", "Q", "--n", "4", "--trials", "30", "--seed", "17", "--check", "intersection"},
      {"probe", irving_fp, "--n", "6", "--trials", "20", "--seed", "17"},
      {"series", "quasi-inverse", "--trials", "20", "--seed", "17"},
      {"series", "sfprobe", "--trials", "20", "--seed", "17"},
      {"series", "sext-demo", "--seed", "17"},
  };
  std::size_t identical = 0;
  for (const auto& c : commands) {
    const CliRun a = cli_run(c), b = cli_run(c);
    identical += a.code == 0 && a.out == b.out && !a.out.empty();
  }
  return {identical == commands.size(),
          std::to_string(identical) + "/" + std::to_string(commands.size()) + " seeded commands byte-identical"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Irving confluence", 1, irving_confluence},
      {2, "normal-word growth", 1, normal_word_growth},
      {3, "PI identity", 30, pi_identity},
      {4, "witness checks", 1, witness_checks},
      {5, "rank inequalities", 120, rank_inequalities},
      {6, "obstruction probe", 60, obstruction_probe_campaign},
      {7, "quasi-inverse", 5, quasi_inverse_check},
      {8, "S-extension", 5, s_extension},
      {9, "stable finiteness", 10, stable_finiteness},
      {10, "determinism", 60, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.ok && secs < c.limit_seconds;
    failures += !pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " (" << secs << " s, limit "
         << c.limit_seconds << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
