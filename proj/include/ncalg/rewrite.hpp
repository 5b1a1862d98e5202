#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/ncpoly.hpp"

namespace ncalg {

/// lhs -> rhs. In the default mode every word of rhs is deglex-smaller than
/// lhs; a truncated system additionally admits words of strictly larger degree.
struct RewriteRule {
  Word lhs;
  NcPoly rhs;
};

/// Orients a relation: its deglex-leading word becomes the lhs and the rest,
/// divided by minus the leading coefficient, the rhs. Throws PreconditionError
/// for the zero relation and QuotientCollapse for a nonzero scalar.
RewriteRule orient(const NcPoly& relation);

class RewriteSystem {
 public:
  static constexpr std::size_t kDefaultStepBudget = 1'000'000;

  /// Validates every rule. `truncation` switches on truncated mode: terms of
  /// degree above the cap are discarded and degree-increasing rules are legal.
  RewriteSystem(AlgebraPtr algebra, std::vector<RewriteRule> rules,
                std::optional<std::size_t> truncation = std::nullopt);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const FieldSpec& field() const noexcept { return algebra_->field; }
  const Alphabet& alphabet() const noexcept { return algebra_->alphabet; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  std::optional<std::size_t> truncation() const noexcept { return truncation_; }

  /// True when no rule has a rhs word of larger degree than its lhs.
  bool degree_nonincreasing() const;

  RewriteSystem with_rule(RewriteRule rule) const;

  /// "y*x*y -> x".
  std::string format_rule(std::size_t index) const;

 private:
  AlgebraPtr algebra_;
  std::vector<RewriteRule> rules_;
  std::optional<std::size_t> truncation_;
};

/// Leftmost position in `w` where some lhs occurs, with the lowest-index rule
/// matching there.
struct Redex {
  std::size_t position;
  std::size_t rule;
};
std::optional<Redex> find_redex(const Word& w, const RewriteSystem& sys);

/// Replaces the occurrence of rule.lhs at `redex` in c*w: returns c*u*rhs*v.
NcPoly apply_rule(const Word& w, const Scalar& c, const Redex& redex, const RewriteSystem& sys);

struct ReduceResult {
  NcPoly poly;
  bool reduced;
};

/// One reduction step on the deglex-greatest reducible term.
ReduceResult reduce_once(const NcPoly& p, const RewriteSystem& sys);

struct NormalFormOptions {
  std::size_t step_budget = RewriteSystem::kDefaultStepBudget;
  /// When set, receives p followed by the polynomial after every step.
  std::vector<NcPoly>* trace = nullptr;
};

/// Iterates reduce_once to a fixed point. Throws BudgetExceeded.
NcPoly normal_form(const NcPoly& p, const RewriteSystem& sys, const NormalFormOptions& options = {});

bool is_normal_word(const Word& w, const RewriteSystem& sys);

/// Words of exactly `degree` letters avoiding every lhs as a factor, in
/// deglex order.
std::vector<Word> enumerate_normal_words(const RewriteSystem& sys, std::size_t degree);

}  // namespace ncalg
