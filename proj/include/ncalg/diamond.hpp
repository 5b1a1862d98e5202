#pragma once

#include <cstddef>
#include <vector>

#include "ncalg/rewrite.hpp"

namespace ncalg {

enum class AmbiguityKind { Overlap, Inclusion };

const char* to_string(AmbiguityKind kind);

/// A word admitting two different rule applications. rule_a's lhs sits at
/// position 0 of `word`, rule_b's lhs at `offset`.
///  - Overlap: word = lhs_a * t = s * lhs_b where a proper nonempty suffix of
///    lhs_a equals a proper nonempty prefix of lhs_b (a == b allowed).
///  - Inclusion: word = lhs_a and lhs_b is a proper factor of it.
struct Ambiguity {
  AmbiguityKind kind;
  std::size_t rule_a;
  std::size_t rule_b;
  Word word;
  std::size_t offset;

  friend bool operator==(const Ambiguity&, const Ambiguity&) = default;
};

/// All overlap and inclusion ambiguities, ordered by (rule_a, rule_b), then
/// overlaps before inclusions, then offset.
std::vector<Ambiguity> find_ambiguities(const RewriteSystem& sys);

/// Outcome of reducing one ambiguity both ways.
struct Resolution {
  Ambiguity ambiguity;
  NcPoly reduct_a;                 // rule_a applied to the ambiguity word
  NcPoly reduct_b;                 // rule_b applied to the ambiguity word
  std::vector<NcPoly> trace_a;     // reduct_a, then every normal-form step
  std::vector<NcPoly> trace_b;
  NcPoly normal_a;
  NcPoly normal_b;
  bool resolvable;
};

struct ConfluenceReport {
  std::vector<Resolution> ambiguities;
  bool overall;
};

/// The Diamond Lemma check. Requires a system without degree-increasing rules.
ConfluenceReport check_confluence(const RewriteSystem& sys,
                                  std::size_t step_budget = RewriteSystem::kDefaultStepBudget);

struct CompletionResult {
  enum class Status { Completed, Exceeded };
  Status status;
  RewriteSystem system;  // the confluent system, or the partial one when Exceeded
  std::size_t rules_added;
};

/// Critical-pair completion: orient the normalized difference of the first
/// unresolvable ambiguity, add it, repeat. Stops with Exceeded when another
/// rule would exceed `max_new_rules` or have an lhs longer than `max_degree`.
/// Throws QuotientCollapse if a critical pair normalizes to a nonzero scalar.
CompletionResult complete(const RewriteSystem& sys, std::size_t max_new_rules, std::size_t max_degree,
                          std::size_t step_budget = RewriteSystem::kDefaultStepBudget);

}  // namespace ncalg
