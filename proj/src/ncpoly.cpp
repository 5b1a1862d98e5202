#include "ncalg/ncpoly.hpp"

#include <algorithm>

#include "ncalg/errors.hpp"

namespace ncalg {

AlgebraPtr make_algebra(FieldSpec field, Alphabet alphabet) {
  return std::make_shared<const FreeAlgebra>(FreeAlgebra{field, std::move(alphabet)});
}

AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> generator_names) {
  return make_algebra(field, Alphabet(std::move(generator_names)));
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw MismatchError("polynomials over different algebras");
}

TermMap::TermMap(AlgebraPtr algebra)
    : algebra_(std::move(algebra)), terms_(DeglexGreater{algebra_->alphabet.rank()}) {}

void TermMap::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TermMap::add(Word&& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TermMap::add(const NcPoly& p) {
  require_same_algebra(algebra_, p.algebra());
  for (const auto& [w, c] : p.terms()) add(w, c);
}

NcPoly TermMap::to_poly() const {
  NcPoly p(algebra_);
  p.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) p.terms_.emplace_back(w, c);
  return p;
}

NcPoly::NcPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw PreconditionError("polynomial without algebra");
}

NcPoly NcPoly::monomial(AlgebraPtr algebra, Word w, Scalar c) {
  if (!(c.field() == algebra->field)) throw MismatchError("coefficient outside the algebra's field");
  for (Letter g : w)
    if (g >= algebra->alphabet.size()) throw PreconditionError("letter index out of range");
  NcPoly p(std::move(algebra));
  if (!c.is_zero()) p.terms_.emplace_back(std::move(w), std::move(c));
  return p;
}

NcPoly NcPoly::monomial(AlgebraPtr algebra, Word w) {
  Scalar one = algebra->field.one();
  return monomial(std::move(algebra), std::move(w), std::move(one));
}

NcPoly NcPoly::constant(AlgebraPtr algebra, Scalar c) { return monomial(std::move(algebra), Word(), std::move(c)); }

NcPoly NcPoly::generator(AlgebraPtr algebra, Letter g) { return monomial(std::move(algebra), Word{g}); }

NcPoly NcPoly::from_terms(AlgebraPtr algebra, std::vector<Term> terms) {
  TermMap acc(algebra);
  for (auto& [w, c] : terms) {
    for (Letter g : w)
      if (g >= algebra->alphabet.size()) throw PreconditionError("letter index out of range");
    acc.add(std::move(w), c);
  }
  return acc.to_poly();
}

std::optional<std::size_t> NcPoly::degree() const {
  if (is_zero()) return std::nullopt;
  return terms_.front().first.degree();
}

std::optional<std::size_t> NcPoly::low_degree() const {
  if (is_zero()) return std::nullopt;
  return terms_.back().first.degree();
}

const NcPoly::Term& NcPoly::leading() const {
  if (is_zero()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

Scalar NcPoly::coefficient(const Word& w) const {
  DeglexGreater greater{alphabet().rank()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [&](const Term& t, const Word& key) { return greater(t.first, key); });
  if (it != terms_.end() && it->first == w) return it->second;
  return field().zero();
}

Scalar NcPoly::constant_term() const { return coefficient(Word()); }

NcPoly NcPoly::truncated(std::size_t max_degree) const {
  NcPoly p(algebra_);
  for (const auto& t : terms_)
    if (t.first.degree() <= max_degree) p.terms_.push_back(t);
  return p;
}

NcPoly NcPoly::operator-() const {
  NcPoly p(*this);
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  require_same_algebra(algebra_, o.algebra_);
  // Both sides are sorted, so a linear merge suffices.
  DeglexGreater greater{alphabet().rank()};
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && greater(a->first, b->first))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || greater(b->first, a->first)) {
      out.push_back(*b++);
    } else {
      Scalar c = a->second + b->second;
      if (!c.is_zero()) out.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) { return *this += -o; }

NcPoly& NcPoly::operator*=(const NcPoly& o) { return *this = *this * o; }

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (!(c.field() == field())) throw MismatchError("scalar outside the polynomial's field");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) { return multiply(a, b); }

bool operator==(const NcPoly& a, const NcPoly& b) {
  return (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_) && a.terms_ == b.terms_;
}

std::string NcPoly::to_string() const {
  if (is_zero()) return "0";
  const bool rational = field().is_rationals();
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    bool negative = rational && sgn(c.rational()) < 0;
    Scalar magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string() + "*";
      out += alphabet().format(w);
    }
  }
  return out;
}

NcPoly multiply(const NcPoly& a, const NcPoly& b, std::optional<std::size_t> cap) {
  require_same_algebra(a.algebra(), b.algebra());
  TermMap acc(a.algebra());
  for (const auto& [u, cu] : a.terms()) {
    for (const auto& [v, cv] : b.terms()) {
      if (cap && u.degree() + v.degree() > *cap) continue;
      acc.add(u * v, cu * cv);
    }
  }
  return acc.to_poly();
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

}  // namespace ncalg
