#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/random.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg {

/// Elements x, y, z of the quotient with solvents a, b for the hypotheses
/// x = y*x*a, z = x*b, y*z = 0, x != 0, z != 0.
struct LemmaWitness {
  NcPoly x;
  NcPoly y;
  NcPoly z;
  NcPoly a;
  NcPoly b;
};

struct WitnessCheck {
  std::string name;        // e.g. "x - y*x*a"
  NcPoly normal_form;      // the normal form that decides the check
  bool expect_zero;        // true: passes iff normal_form == 0
  bool passed;
};

struct WitnessReport {
  /// (i) x - y*x*a, (ii) z - x*b, (iii) y*z, (iv-x) x != 0, (iv-z) z != 0.
  std::vector<WitnessCheck> checks;
  bool verdict;
};

/// Decides every hypothesis through normal forms. Requires a confluent system.
WitnessReport verify_lemma_witness(const RewriteSystem& sys, const LemmaWitness& w);

/// Random polynomial: 1-4 terms, each of uniform degree in [0, max_degree],
/// its word drawn uniformly among the normal words of that degree, with a
/// uniform nonzero coefficient. Degrees with no normal word are redrawn.
NcPoly random_normal_poly(const RewriteSystem& sys, Rng& rng, std::size_t max_degree);

struct IdentityCounterexample {
  std::size_t trial;
  std::vector<NcPoly> substitution;  // X1, Y1, X2, Y2, X3, Y3
  NcPoly value;                      // nonzero normal form
};

struct IdentityResult {
  std::size_t trials;
  std::optional<IdentityCounterexample> counterexample;
  bool holds() const { return !counterexample; }
};

/// Normal form of [X1,Y1][X2,Y2][X3,Y3] for the given six elements.
NcPoly triple_commutator_product(const RewriteSystem& sys, const std::vector<NcPoly>& substitution);

/// Random search for a violation of [X1,Y1][X2,Y2][X3,Y3] = 0. Trial t draws
/// from Rng::for_trial(seed, t). Requires a confluent system.
IdentityResult verify_identity_comm3(const RewriteSystem& sys, std::size_t trials, std::size_t max_degree,
                                     std::uint64_t seed);

}  // namespace ncalg
