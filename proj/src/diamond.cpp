#include "ncalg/diamond.hpp"

#include <algorithm>
#include <optional>

#include "ncalg/errors.hpp"

namespace ncalg {

const char* to_string(AmbiguityKind kind) { return kind == AmbiguityKind::Overlap ? "overlap" : "inclusion"; }

std::vector<Ambiguity> find_ambiguities(const RewriteSystem& sys) {
  std::vector<Ambiguity> out;
  const auto& rules = sys.rules();
  for (std::size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lhs;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lhs;
      // Overlaps, by increasing offset (= decreasing overlap length).
      for (std::size_t offset = 1; offset < la.degree(); ++offset) {
        const std::size_t len = la.degree() - offset;
        if (len >= lb.degree()) continue;
        if (!std::equal(la.begin() + offset, la.end(), lb.begin())) continue;
        out.push_back({AmbiguityKind::Overlap, a, b, la * lb.sub(len, lb.degree() - len), offset});
      }
      if (a == b || lb.degree() >= la.degree()) continue;
      for (auto pos = la.find(lb); pos; pos = la.find(lb, *pos + 1))
        out.push_back({AmbiguityKind::Inclusion, a, b, la, *pos});
    }
  }
  return out;
}

namespace {

Resolution resolve(const Ambiguity& amb, const RewriteSystem& sys, std::size_t step_budget) {
  const Scalar one = sys.field().one();
  NcPoly reduct_a = apply_rule(amb.word, one, Redex{0, amb.rule_a}, sys);
  NcPoly reduct_b = apply_rule(amb.word, one, Redex{amb.offset, amb.rule_b}, sys);
  std::vector<NcPoly> trace_a, trace_b;
  NcPoly normal_a = normal_form(reduct_a, sys, {step_budget, &trace_a});
  NcPoly normal_b = normal_form(reduct_b, sys, {step_budget, &trace_b});
  const bool ok = normal_a == normal_b;
  return Resolution{amb,
                    std::move(reduct_a),
                    std::move(reduct_b),
                    std::move(trace_a),
                    std::move(trace_b),
                    std::move(normal_a),
                    std::move(normal_b),
                    ok};
}

}  // namespace

ConfluenceReport check_confluence(const RewriteSystem& sys, std::size_t step_budget) {
  if (!sys.degree_nonincreasing())
    throw PreconditionError("confluence check needs a system without degree-increasing rules");
  ConfluenceReport report{{}, true};
  for (const Ambiguity& amb : find_ambiguities(sys)) {
    report.ambiguities.push_back(resolve(amb, sys, step_budget));
    report.overall = report.overall && report.ambiguities.back().resolvable;
  }
  return report;
}

CompletionResult complete(const RewriteSystem& sys, std::size_t max_new_rules, std::size_t max_degree,
                          std::size_t step_budget) {
  if (!sys.degree_nonincreasing())
    throw PreconditionError("completion needs a system without degree-increasing rules");
  RewriteSystem current = sys;
  std::size_t added = 0;
  while (true) {
    std::optional<Resolution> failing;
    for (const Ambiguity& amb : find_ambiguities(current)) {
      Resolution r = resolve(amb, current, step_budget);
      if (!r.resolvable) {
        failing = std::move(r);
        break;
      }
    }
    if (!failing) return {CompletionResult::Status::Completed, std::move(current), added};

    NcPoly diff = normal_form(failing->normal_a - failing->normal_b, current, {step_budget, nullptr});
    if (diff.is_constant())
      throw QuotientCollapse("critical pair at " + current.alphabet().format(failing->ambiguity.word) +
                             " reduces to the nonzero scalar " + diff.to_string());
    RewriteRule rule = orient(diff);
    if (added >= max_new_rules || rule.lhs.degree() > max_degree)
      return {CompletionResult::Status::Exceeded, std::move(current), added};
    current = current.with_rule(std::move(rule));
    ++added;
  }
}

}  // namespace ncalg
