#include "ncalg/witness.hpp"

#include <map>

#include "ncalg/diamond.hpp"
#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

void require_confluent(const RewriteSystem& sys) {
  if (!check_confluence(sys).overall) throw PreconditionError("rewrite system is not confluent");
}

}  // namespace

WitnessReport verify_lemma_witness(const RewriteSystem& sys, const LemmaWitness& w) {
  require_confluent(sys);
  auto nf = [&](const NcPoly& p) { return normal_form(p, sys); };
  WitnessReport report;
  auto add = [&](std::string name, NcPoly value, bool expect_zero) {
    const bool passed = value.is_zero() == expect_zero;
    report.checks.push_back({std::move(name), std::move(value), expect_zero, passed});
  };
  add("x - y*x*a", nf(w.x - w.y * w.x * w.a), true);
  add("z - x*b", nf(w.z - w.x * w.b), true);
  add("y*z", nf(w.y * w.z), true);
  add("x", nf(w.x), false);
  add("z", nf(w.z), false);
  report.verdict = true;
  for (const auto& c : report.checks) report.verdict = report.verdict && c.passed;
  return report;
}

NcPoly random_normal_poly(const RewriteSystem& sys, Rng& rng, std::size_t max_degree) {
  std::map<std::size_t, std::vector<Word>> words;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    auto ws = enumerate_normal_words(sys, d);
    if (!ws.empty()) words.emplace(d, std::move(ws));
  }
  if (words.empty()) return NcPoly(sys.algebra());

  std::vector<NcPoly::Term> terms;
  const auto count = rng.between(1, 4);
  for (long long k = 0; k < count; ++k) {
    std::size_t d;
    do {
      d = static_cast<std::size_t>(rng.between(0, static_cast<long long>(max_degree)));
    } while (!words.contains(d));
    const auto& pool = words.at(d);
    terms.emplace_back(pool[rng.below(pool.size())], sys.field().random(rng, true));
  }
  return NcPoly::from_terms(sys.algebra(), std::move(terms));
}

NcPoly triple_commutator_product(const RewriteSystem& sys, const std::vector<NcPoly>& s) {
  if (s.size() != 6) throw PreconditionError("triple commutator needs six elements");
  // nf is a ring homomorphism for a confluent system, so intermediate
  // products may be reduced early.
  NcPoly acc = NcPoly::constant(sys.algebra(), sys.field().one());
  for (std::size_t i = 0; i < 3; ++i) {
    NcPoly c = normal_form(commutator(s[2 * i], s[2 * i + 1]), sys);
    acc = normal_form(acc * c, sys);
  }
  return acc;
}

IdentityResult verify_identity_comm3(const RewriteSystem& sys, std::size_t trials, std::size_t max_degree,
                                     std::uint64_t seed) {
  require_confluent(sys);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = Rng::for_trial(seed, t);
    std::vector<NcPoly> subst;
    for (int i = 0; i < 6; ++i) subst.push_back(random_normal_poly(sys, rng, max_degree));
    NcPoly value = triple_commutator_product(sys, subst);
    if (!value.is_zero()) return {t + 1, IdentityCounterexample{t, std::move(subst), std::move(value)}};
  }
  return {trials, std::nullopt};
}

}  // namespace ncalg
