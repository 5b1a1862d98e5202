#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <set>

#include "ncalg/errors.hpp"

namespace ncalg {

RewriteRule orient(const NcPoly& relation) {
  if (relation.is_zero()) throw PreconditionError("cannot orient the zero relation");
  const auto& [lead, coeff] = relation.leading();
  if (lead.empty()) throw QuotientCollapse("relation " + relation.to_string() + " is a nonzero scalar");
  NcPoly rest = relation - NcPoly::monomial(relation.algebra(), lead, coeff);
  return RewriteRule{lead, rest * (-coeff.inverse())};
}

RewriteSystem::RewriteSystem(AlgebraPtr algebra, std::vector<RewriteRule> rules,
                             std::optional<std::size_t> truncation)
    : algebra_(std::move(algebra)), rules_(std::move(rules)), truncation_(truncation) {
  if (truncation_ && *truncation_ == 0) throw PreconditionError("truncation cap must be positive");
  const auto rank = alphabet().rank();
  std::set<std::vector<Letter>> seen;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const RewriteRule& r = rules_[i];
    const std::string label = "rule " + std::to_string(i + 1);
    if (r.lhs.empty()) throw PreconditionError(label + ": empty left-hand side");
    for (Letter g : r.lhs)
      if (g >= alphabet().size()) throw PreconditionError(label + ": letter out of range");
    require_same_algebra(algebra_, r.rhs.algebra());
    if (!seen.insert(std::vector<Letter>(r.lhs.begin(), r.lhs.end())).second)
      throw PreconditionError(label + ": duplicate left-hand side " + alphabet().format(r.lhs));
    for (const auto& [w, c] : r.rhs.terms()) {
      if (w == r.lhs) throw PreconditionError(label + ": lhs appears on the right-hand side");
      if (deglex_compare(w, r.lhs, rank) < 0) continue;
      if (truncation_ && w.degree() > r.lhs.degree()) continue;
      throw PreconditionError(label + ": right-hand side word " + alphabet().format(w) +
                              " is not smaller than the lhs" +
                              (truncation_ ? "" : " (degree-increasing rules need truncated mode)"));
    }
  }
}

bool RewriteSystem::degree_nonincreasing() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const RewriteRule& r) {
    return r.rhs.is_zero() || *r.rhs.degree() <= r.lhs.degree();
  });
}

RewriteSystem RewriteSystem::with_rule(RewriteRule rule) const {
  std::vector<RewriteRule> rules = rules_;
  rules.push_back(std::move(rule));
  return RewriteSystem(algebra_, std::move(rules), truncation_);
}

std::string RewriteSystem::format_rule(std::size_t index) const {
  const RewriteRule& r = rules_.at(index);
  return alphabet().format(r.lhs) + " -> " + r.rhs.to_string();
}

std::optional<Redex> find_redex(const Word& w, const RewriteSystem& sys) {
  const auto& rules = sys.rules();
  for (std::size_t pos = 0; pos < w.degree(); ++pos) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const Word& lhs = rules[i].lhs;
      if (pos + lhs.degree() > w.degree()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) return Redex{pos, i};
    }
  }
  return std::nullopt;
}

NcPoly apply_rule(const Word& w, const Scalar& c, const Redex& redex, const RewriteSystem& sys) {
  const RewriteRule& rule = sys.rules().at(redex.rule);
  const Word prefix = w.sub(0, redex.position);
  const Word suffix = w.sub(redex.position + rule.lhs.degree(), w.degree() - redex.position - rule.lhs.degree());
  TermMap acc(sys.algebra());
  for (const auto& [v, cv] : rule.rhs.terms()) {
    Word out = prefix * v * suffix;
    if (sys.truncation() && out.degree() > *sys.truncation()) continue;
    acc.add(std::move(out), c * cv);
  }
  return acc.to_poly();
}

namespace {

void require_system_algebra(const NcPoly& p, const RewriteSystem& sys) {
  require_same_algebra(p.algebra(), sys.algebra());
}

}  // namespace

ReduceResult reduce_once(const NcPoly& p, const RewriteSystem& sys) {
  require_system_algebra(p, sys);
  NcPoly q = sys.truncation() ? p.truncated(*sys.truncation()) : p;
  for (const auto& [w, c] : q.terms()) {
    auto redex = find_redex(w, sys);
    if (!redex) continue;
    NcPoly replacement = apply_rule(w, c, *redex, sys);
    q -= NcPoly::monomial(q.algebra(), w, c);
    q += replacement;
    return {std::move(q), true};
  }
  return {std::move(q), false};
}

NcPoly normal_form(const NcPoly& p, const RewriteSystem& sys, const NormalFormOptions& options) {
  require_system_algebra(p, sys);
  TermMap acc(sys.algebra());
  if (sys.truncation()) acc.add(p.truncated(*sys.truncation()));
  else acc.add(p);
  if (options.trace) options.trace->push_back(acc.to_poly());

  // Terms before the cursor are irreducible. Each step rewrites the first
  // reducible term, which is exactly the deglex-greatest one reduce_once
  // would pick.
  auto& terms = acc.map();
  const DeglexGreater greater{sys.alphabet().rank()};
  std::size_t steps = 0;
  auto it = terms.begin();
  while (it != terms.end()) {
    auto redex = find_redex(it->first, sys);
    if (!redex) {
      ++it;
      continue;
    }
    if (++steps > options.step_budget)
      throw BudgetExceeded("normal form exceeded " + std::to_string(options.step_budget) + " reduction steps");
    const Word w = it->first;
    const Scalar c = it->second;
    terms.erase(it);
    NcPoly replacement = apply_rule(w, c, *redex, sys);
    bool grew = false;
    for (const auto& [v, cv] : replacement.terms()) {
      if (greater(v, w)) grew = true;
      acc.add(v, cv);
    }
    if (options.trace) options.trace->push_back(acc.to_poly());
    it = grew ? terms.begin() : terms.upper_bound(w);
  }
  return acc.to_poly();
}

bool is_normal_word(const Word& w, const RewriteSystem& sys) { return !find_redex(w, sys).has_value(); }

std::vector<Word> enumerate_normal_words(const RewriteSystem& sys, std::size_t degree) {
  const std::vector<Letter> order = sys.alphabet().letters_in_order();
  std::vector<Word> out;
  std::vector<Letter> current;
  current.reserve(degree);

  // A new factor can only end at the last letter, so only suffixes are checked.
  auto suffix_clean = [&] {
    for (const auto& rule : sys.rules()) {
      const Word& lhs = rule.lhs;
      if (lhs.degree() > current.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), current.end() - static_cast<std::ptrdiff_t>(lhs.degree())))
        return false;
    }
    return true;
  };

  auto extend = [&](auto&& self) -> void {
    if (current.size() == degree) {
      out.emplace_back(current);
      return;
    }
    for (Letter g : order) {
      current.push_back(g);
      if (suffix_clean()) self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace ncalg
