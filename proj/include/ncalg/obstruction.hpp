#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

#include "ncalg/matrix.hpp"
#include "ncalg/ncpoly.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/witness.hpp"

namespace ncalg {

/// rank(YX) <= rank(YZ) + rank(X) - rank(Z) + rank(Z - XB). Valid for all
/// square X, Y, Z, B of one size.
struct ClaimCheck {
  bool holds;
  long long lhs;
  long long rhs;
};
ClaimCheck claim_bound_check(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z, const ExactMatrix& b);

/// rank(Z) <= rank(YZ) + rank(Z - XB) + rank(X - YXA). margin = rhs - lhs.
struct MasterCheck {
  bool holds;
  long long margin;
};
MasterCheck master_bound_check(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z, const ExactMatrix& a,
                               const ExactMatrix& b);

using Assignment = std::map<std::string, ExactMatrix>;

/// Substitutes matrices for generators: words become products (the empty word
/// the identity), sums stay sums.
ExactMatrix evaluate(const NcPoly& p, const Assignment& assignment);

/// Ranks and defects of a matrix assignment for a lemma witness.
/// T = X - YXA, S = Z - XB; margin = rank_yz + rank_t + rank_s - rank_z.
/// The "good approximation" regime asks for some alpha with
///   min(rank_x, rank_z)/n > alpha  and  max(rank_yz, rank_t, rank_s)/n < alpha/4,
/// i.e. alpha strictly inside (alpha_lower, alpha_upper) with
///   alpha_lower = 4 max(defects)/n, alpha_upper = min(rank_x, rank_z)/n.
struct DefectReport {
  std::size_t n;
  std::size_t rank_x, rank_z, rank_yz, rank_t, rank_s;
  long long margin;
  mpq_class alpha_lower;
  mpq_class alpha_upper;
  bool regime_feasible;

  /// rank / n as an exact rational.
  mpq_class normalized(std::size_t rank) const {
    if (n == 0) return mpq_class(0);
    mpq_class q(rank, n);
    q.canonicalize();
    return q;
  }
};

DefectReport defect_report(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z, const ExactMatrix& a,
                           const ExactMatrix& b);

/// Evaluates the witness under the assignment and measures the defects.
/// Requires the witness to pass verify_lemma_witness and the assignment to
/// cover every generator with square matrices of one size over the system's
/// field. Throws std::logic_error if the margin is ever negative.
DefectReport obstruction_probe(const RewriteSystem& sys, const LemmaWitness& w, const Assignment& assignment);

/// Every generator gets random_matrix with a rank uniform in [0, n].
Assignment random_assignment(const RewriteSystem& sys, std::size_t n, Rng& rng);

}  // namespace ncalg
