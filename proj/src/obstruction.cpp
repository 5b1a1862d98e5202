#include "ncalg/obstruction.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

void require_square_family(std::initializer_list<const ExactMatrix*> ms) {
  const ExactMatrix& first = **ms.begin();
  for (const ExactMatrix* m : ms) {
    if (!m->is_square() || m->rows() != first.rows()) throw MismatchError("matrices must be square of one size");
    if (!(m->field() == first.field())) throw MismatchError("matrices over different fields");
  }
}

long long rk(const ExactMatrix& m) { return static_cast<long long>(exact_rank(m)); }

}  // namespace

ClaimCheck claim_bound_check(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z, const ExactMatrix& b) {
  require_square_family({&x, &y, &z, &b});
  const long long lhs = rk(y * x);
  const long long rhs = rk(y * z) + rk(x) - rk(z) + rk(z - x * b);
  return {lhs <= rhs, lhs, rhs};
}

MasterCheck master_bound_check(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z, const ExactMatrix& a,
                               const ExactMatrix& b) {
  require_square_family({&x, &y, &z, &a, &b});
  const long long margin = rk(y * z) + rk(z - x * b) + rk(x - y * x * a) - rk(z);
  return {margin >= 0, margin};
}

ExactMatrix evaluate(const NcPoly& p, const Assignment& assignment) {
  const Alphabet& alphabet = p.alphabet();
  const ExactMatrix* sample = nullptr;
  std::vector<const ExactMatrix*> images(alphabet.size());
  for (Letter g = 0; g < alphabet.size(); ++g) {
    auto it = assignment.find(alphabet.name(g));
    if (it == assignment.end()) throw PreconditionError("assignment misses generator '" + alphabet.name(g) + "'");
    images[g] = &it->second;
    if (!sample) sample = &it->second;
    if (!it->second.is_square() || it->second.rows() != sample->rows())
      throw MismatchError("assignment matrices must be square of one size");
    if (!(it->second.field() == p.field())) throw MismatchError("assignment field differs from the algebra's");
  }
  const std::size_t n = sample ? sample->rows() : 0;
  ExactMatrix out(p.field(), n, n);
  for (const auto& [w, c] : p.terms()) {
    ExactMatrix prod = ExactMatrix::identity(p.field(), n);
    for (Letter g : w) prod = prod * *images[g];
    out += c * prod;
  }
  return out;
}

DefectReport defect_report(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z, const ExactMatrix& a,
                           const ExactMatrix& b) {
  require_square_family({&x, &y, &z, &a, &b});
  DefectReport r{};
  r.n = x.rows();
  r.rank_x = exact_rank(x);
  r.rank_z = exact_rank(z);
  r.rank_yz = exact_rank(y * z);
  r.rank_t = exact_rank(x - y * x * a);
  r.rank_s = exact_rank(z - x * b);
  r.margin = static_cast<long long>(r.rank_yz + r.rank_t + r.rank_s) - static_cast<long long>(r.rank_z);
  const std::size_t worst = std::max({r.rank_yz, r.rank_t, r.rank_s});
  r.alpha_lower = r.normalized(4 * worst);
  r.alpha_upper = r.normalized(std::min(r.rank_x, r.rank_z));
  r.alpha_lower.canonicalize();
  r.alpha_upper.canonicalize();
  r.regime_feasible = r.alpha_lower < r.alpha_upper;
  return r;
}

DefectReport obstruction_probe(const RewriteSystem& sys, const LemmaWitness& w, const Assignment& assignment) {
  if (!verify_lemma_witness(sys, w).verdict) throw PreconditionError("witness does not satisfy the lemma hypotheses");
  for (const auto& [name, m] : assignment) {
    if (!sys.alphabet().index_of(name)) throw PreconditionError("assignment names unknown generator '" + name + "'");
    (void)m;
  }
  DefectReport r = defect_report(evaluate(w.x, assignment), evaluate(w.y, assignment), evaluate(w.z, assignment),
                                 evaluate(w.a, assignment), evaluate(w.b, assignment));
  if (r.margin < 0) throw std::logic_error("obstruction margin is negative: rank inequality violated");
  if (r.regime_feasible) throw std::logic_error("defect regime reported feasible despite nonnegative margin");
  return r;
}

Assignment random_assignment(const RewriteSystem& sys, std::size_t n, Rng& rng) {
  Assignment out;
  for (const auto& name : sys.alphabet().names()) {
    const auto rank = static_cast<std::size_t>(rng.between(0, static_cast<long long>(n)));
    out.emplace(name, random_matrix(sys.field(), n, rank, rng));
  }
  return out;
}

}  // namespace ncalg
