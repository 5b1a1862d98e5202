#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncalg/series.hpp"

namespace ncalg {

/// Element unit + s0 + s1*z of the unital hull of S = R + R^1 z, with R the
/// truncated series of zero constant term and R^1 = F + R. `unit` is zero for
/// elements of S itself.
struct SExtElement {
  Scalar unit;
  TruncSeries s0;  // zero constant term
  TruncSeries s1;  // any constant term

  static SExtElement zero(const AlgebraPtr& algebra, std::size_t cap);
  static SExtElement scalar(const Scalar& c, std::size_t cap, const AlgebraPtr& algebra);
  /// The element z.
  static SExtElement z(const AlgebraPtr& algebra, std::size_t cap);
  /// r with r in R (throws if r has a constant term).
  static SExtElement from_ring(const TruncSeries& r);
  /// r*z with r in R^1.
  static SExtElement times_z(const TruncSeries& r);

  /// Drops the z component: the map onto R^1.
  TruncSeries project() const;

  friend bool operator==(const SExtElement&, const SExtElement&) = default;

  std::string to_string() const;
};

SExtElement s_ext_add(const SExtElement& s, const SExtElement& t);

/// (l + s0 + s1 z)(m + t0 + t1 z) = lm + (l t0 + m s0 + s0 t0) + (l t1 + m s1 + s0 t1) z.
/// On S this is s0 t0 + s0 t1 z: z kills everything on its right except scalars.
SExtElement s_ext_mul(const SExtElement& s, const SExtElement& t);

/// Coefficients alpha_i with u_i (y x z) v_i = alpha_i u_i^0 y x z, where
/// u_i^0 = unit + s0 of u_i. alpha_i is the scalar part of v_i.
std::vector<Scalar> rewrite_k_step(const std::vector<SExtElement>& u, const std::vector<SExtElement>& v);

SExtElement random_sext(const AlgebraPtr& algebra, std::size_t cap, Rng& rng, bool unital);

struct CollapseStep {
  std::string label;
  std::string value;
  bool holds;
};

struct CollapseReplay {
  std::vector<CollapseStep> steps;
  TruncSeries f;
  TruncSeries g;
  bool verdict;
};

/// Replays the argument that x z = f x z forces x z = 0, for the element
/// sum_i u_i (y x z) v_i. The algebra must have generators named x and y.
CollapseReplay replay_collapse(const AlgebraPtr& algebra, std::size_t cap, const std::vector<SExtElement>& u,
                               const std::vector<SExtElement>& v);

}  // namespace ncalg
