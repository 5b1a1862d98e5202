#include "ncalg/series.hpp"

#include "ncalg/errors.hpp"

namespace ncalg {

TruncSeries::TruncSeries(NcPoly body, std::size_t cap) : body_(std::move(body)), cap_(cap) {
  if (cap_ == 0) throw PreconditionError("truncation cap must be positive");
  if (body_.degree() && *body_.degree() > cap_) body_ = body_.truncated(cap_);
}

TruncSeries TruncSeries::zero(AlgebraPtr algebra, std::size_t cap) { return TruncSeries(NcPoly(std::move(algebra)), cap); }

TruncSeries TruncSeries::one(AlgebraPtr algebra, std::size_t cap) {
  Scalar unit = algebra->field.one();
  return TruncSeries(NcPoly::constant(std::move(algebra), std::move(unit)), cap);
}

TruncSeries TruncSeries::radical_part() const {
  return TruncSeries(body_ - NcPoly::constant(algebra(), constant_term()), cap_);
}

void TruncSeries::require_same_cap(const TruncSeries& o) const {
  if (cap_ != o.cap_)
    throw MismatchError("truncation caps differ: " + std::to_string(cap_) + " vs " + std::to_string(o.cap_));
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  require_same_cap(o);
  body_ += o.body_;
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  require_same_cap(o);
  body_ -= o.body_;
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Scalar& c) {
  body_ *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.require_same_cap(b);
  return TruncSeries(multiply(a.body_, b.body_, a.cap_), a.cap_);
}

TruncSeries trunc_mul(const TruncSeries& f, const TruncSeries& g) { return f * g; }
TruncSeries trunc_add(const TruncSeries& f, const TruncSeries& g) { return f + g; }

TruncSeries circle(const TruncSeries& a, const TruncSeries& b) { return a + b - a * b; }

TruncSeries quasi_inverse(const TruncSeries& f) {
  if (!f.constant_term().is_zero())
    throw PreconditionError("quasi-inverse needs a zero constant term, got " + f.constant_term().to_string());
  TruncSeries sum = TruncSeries::zero(f.algebra(), f.cap());
  TruncSeries power = f;
  for (std::size_t k = 1; k <= f.cap() && !power.is_zero(); ++k) {
    sum += power;
    power = power * f;
  }
  return -sum;
}

TruncSeries random_radical_series(const AlgebraPtr& algebra, std::size_t cap, Rng& rng) {
  std::vector<NcPoly::Term> terms;
  const auto count = rng.between(1, 4);
  const auto letters = algebra->alphabet.size();
  for (long long k = 0; k < count; ++k) {
    const auto degree = static_cast<std::size_t>(rng.between(1, static_cast<long long>(cap)));
    std::vector<Letter> w(degree);
    for (auto& g : w) g = static_cast<Letter>(rng.below(letters));
    terms.emplace_back(Word(std::move(w)), algebra->field.random(rng, true));
  }
  return TruncSeries(NcPoly::from_terms(algebra, std::move(terms)), cap);
}

SeriesMatrix::SeriesMatrix(AlgebraPtr algebra, std::size_t n, std::size_t cap)
    : algebra_(std::move(algebra)), n_(n), cap_(cap), entries_(n * n, TruncSeries::zero(algebra_, cap)) {}

SeriesMatrix SeriesMatrix::identity(AlgebraPtr algebra, std::size_t n, std::size_t cap) {
  SeriesMatrix m(algebra, n, cap);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = TruncSeries::one(algebra, cap);
  return m;
}

bool SeriesMatrix::is_identity() const { return *this == identity(algebra_, n_, cap_); }

void SeriesMatrix::require_compatible(const SeriesMatrix& o) const {
  if (n_ != o.n_ || cap_ != o.cap_) throw MismatchError("series matrices differ in size or cap");
  require_same_algebra(algebra_, o.algebra_);
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  a.require_compatible(b);
  SeriesMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  a.require_compatible(b);
  SeriesMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  a.require_compatible(b);
  SeriesMatrix out(a.algebra_, a.n_, a.cap_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j)
      for (std::size_t k = 0; k < a.n_; ++k) out.at(i, j) += a.at(i, k) * b.at(k, j);
  return out;
}

bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
  return a.n_ == b.n_ && a.cap_ == b.cap_ && a.entries_ == b.entries_;
}

std::vector<std::string> SeriesMatrix::format_rows() const {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n_; ++i) {
    std::string row = "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) row += ", ";
      row += at(i, j).to_string();
    }
    rows.push_back(row + "]");
  }
  return rows;
}

SeriesMatrix neumann_inverse(const SeriesMatrix& m) {
  const std::size_t n = m.size();
  const Scalar one = m.algebra()->field.one();
  SeriesMatrix nil(m.algebra(), n, m.cap());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar c = m.at(i, j).constant_term();
      if (!(c == (i == j ? one : m.algebra()->field.zero())))
        throw PreconditionError("constant-term matrix is not the identity (only I + radical is supported)");
      nil.at(i, j) = m.at(i, j).radical_part();
    }
  }
  // Entries of nil^k have no terms below degree k, so the sum stops at cap.
  const SeriesMatrix minus_nil = SeriesMatrix(m.algebra(), n, m.cap()) - nil;
  SeriesMatrix sum = SeriesMatrix::identity(m.algebra(), n, m.cap());
  SeriesMatrix power = sum;
  for (std::size_t k = 1; k <= m.cap(); ++k) {
    power = power * minus_nil;
    sum = sum + power;
  }
  return sum;
}

SeriesMatrix random_unipotent(const AlgebraPtr& algebra, std::size_t n, std::size_t cap, Rng& rng) {
  SeriesMatrix m = SeriesMatrix::identity(algebra, n, cap);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) += random_radical_series(algebra, cap, rng);
  return m;
}

DirectFinitenessResult stable_finiteness_probe(const SeriesMatrix& x, const SeriesMatrix& y) {
  if (!(x * y).is_identity()) throw PreconditionError("probe needs XY = I");
  SeriesMatrix yx = y * x;
  if (yx.is_identity()) return {true, std::nullopt};
  return {false, std::move(yx)};
}

}  // namespace ncalg
