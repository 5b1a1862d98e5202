#include "ncalg/sext.hpp"

#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

TruncSeries lift(const Scalar& c, const AlgebraPtr& algebra, std::size_t cap) {
  return TruncSeries(NcPoly::constant(algebra, c), cap);
}

void require_compatible(const SExtElement& s, const SExtElement& t) {
  if (s.s0.cap() != t.s0.cap()) throw MismatchError("S-extension elements with different caps");
  require_same_algebra(s.s0.algebra(), t.s0.algebra());
}

}  // namespace

SExtElement SExtElement::zero(const AlgebraPtr& algebra, std::size_t cap) {
  return {algebra->field.zero(), TruncSeries::zero(algebra, cap), TruncSeries::zero(algebra, cap)};
}

SExtElement SExtElement::scalar(const Scalar& c, std::size_t cap, const AlgebraPtr& algebra) {
  SExtElement e = SExtElement::zero(algebra, cap);
  e.unit = c;
  return e;
}

SExtElement SExtElement::z(const AlgebraPtr& algebra, std::size_t cap) {
  SExtElement e = SExtElement::zero(algebra, cap);
  e.s1 = TruncSeries::one(algebra, cap);
  return e;
}

SExtElement SExtElement::from_ring(const TruncSeries& r) {
  if (!r.constant_term().is_zero()) throw PreconditionError("element of R must have zero constant term");
  SExtElement e = zero(r.algebra(), r.cap());
  e.s0 = r;
  return e;
}

SExtElement SExtElement::times_z(const TruncSeries& r) {
  SExtElement e = zero(r.algebra(), r.cap());
  e.s1 = r;
  return e;
}

TruncSeries SExtElement::project() const { return lift(unit, s0.algebra(), s0.cap()) + s0; }

std::string SExtElement::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (!unit.is_zero()) append(unit.to_string());
  if (!s0.is_zero()) append("(" + s0.to_string() + ")");
  if (!s1.is_zero()) append("(" + s1.to_string() + ")*z");
  return out.empty() ? "0" : out;
}

SExtElement s_ext_add(const SExtElement& s, const SExtElement& t) {
  require_compatible(s, t);
  return {s.unit + t.unit, s.s0 + t.s0, s.s1 + t.s1};
}

SExtElement s_ext_mul(const SExtElement& s, const SExtElement& t) {
  require_compatible(s, t);
  return {s.unit * t.unit,
          s.unit * t.s0 + t.unit * s.s0 + s.s0 * t.s0,
          s.unit * t.s1 + t.unit * s.s1 + s.s0 * t.s1};
}

std::vector<Scalar> rewrite_k_step(const std::vector<SExtElement>& u, const std::vector<SExtElement>& v) {
  if (u.size() != v.size())
    throw MismatchError("u and v lists differ in length: " + std::to_string(u.size()) + " vs " +
                        std::to_string(v.size()));
  std::vector<Scalar> alpha;
  alpha.reserve(v.size());
  for (const auto& vi : v) alpha.push_back(vi.unit);
  return alpha;
}

SExtElement random_sext(const AlgebraPtr& algebra, std::size_t cap, Rng& rng, bool unital) {
  SExtElement e = SExtElement::zero(algebra, cap);
  if (unital) e.unit = algebra->field.random(rng, false);
  if (rng.below(4) != 0) e.s0 = random_radical_series(algebra, cap, rng);
  if (rng.below(4) != 0) e.s1 = random_radical_series(algebra, cap, rng) + lift(algebra->field.random(rng, false), algebra, cap);
  return e;
}

CollapseReplay replay_collapse(const AlgebraPtr& algebra, std::size_t cap, const std::vector<SExtElement>& u,
                               const std::vector<SExtElement>& v) {
  const auto gx = algebra->alphabet.index_of("x");
  const auto gy = algebra->alphabet.index_of("y");
  if (!gx || !gy) throw PreconditionError("the collapse replay needs generators named x and y");
  const TruncSeries x(NcPoly::generator(algebra, *gx), cap);
  const TruncSeries y(NcPoly::generator(algebra, *gy), cap);
  const TruncSeries one = TruncSeries::one(algebra, cap);

  CollapseReplay out{{}, TruncSeries::zero(algebra, cap), TruncSeries::zero(algebra, cap), true};
  auto step = [&](std::string label, std::string value, bool holds) {
    out.steps.push_back({std::move(label), std::move(value), holds});
    out.verdict = out.verdict && holds;
  };

  const std::vector<Scalar> alpha = rewrite_k_step(u, v);

  // sum_i u_i (y x z) v_i, multiplied out in S^1.
  const SExtElement yxz = SExtElement::times_z(y * x);
  SExtElement sum = SExtElement::zero(algebra, cap);
  for (std::size_t i = 0; i < u.size(); ++i) sum = s_ext_add(sum, s_ext_mul(s_ext_mul(u[i], yxz), v[i]));
  step("sum_i u_i*(y*x*z)*v_i", sum.to_string(), true);

  std::string alpha_text;
  for (std::size_t i = 0; i < alpha.size(); ++i) alpha_text += (i ? ", " : "") + alpha[i].to_string();
  step("alpha_i = scalar part of v_i", "[" + alpha_text + "]", true);

  TruncSeries f = TruncSeries::zero(algebra, cap);
  for (std::size_t i = 0; i < u.size(); ++i) f += alpha[i] * (u[i].project() * y);
  step("f = sum_i alpha_i*u_i^0*y", f.to_string(), f.constant_term().is_zero());

  const SExtElement fxz = SExtElement::times_z(f * x);
  step("sum_i u_i*(y*x*z)*v_i = f*x*z", fxz.to_string(), sum == fxz);

  const TruncSeries g = quasi_inverse(f);
  step("g = quasi-inverse of f, g*f = f + g", g.to_string(), g * f == f + g);
  step("f*g = f + g", (f * g).to_string(), f * g == f + g);

  const SExtElement xz = SExtElement::times_z(x);
  const SExtElement g_fxz = s_ext_mul(SExtElement::from_ring(g), fxz);
  const SExtElement rhs = s_ext_add(fxz, s_ext_mul(SExtElement::from_ring(g), xz));
  step("g*(f*x*z) = f*x*z + g*x*z", g_fxz.to_string(), g_fxz == rhs);

  step("(1 - g)*(1 - f) = 1", ((one - g) * (one - f)).to_string(), (one - g) * (one - f) == one);

  // If x z = f x z then x z = (1 - g)(1 - f) x z = (1 - g) 0 = 0.
  const SExtElement residual = SExtElement::times_z((one - f) * x);
  const SExtElement recovered = s_ext_mul(SExtElement::from_ring(-g), residual);
  const SExtElement back = s_ext_add(residual, recovered);
  step("(1 - g)*((1 - f)*x*z) = x*z, so x*z = f*x*z forces x*z = 0", back.to_string(), back == xz);
  step("(1 - f)*x*z != 0 in the truncated free ring", residual.to_string(), !residual.s1.is_zero());

  out.f = f;
  out.g = g;
  return out;
}

}  // namespace ncalg
