#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/ncpoly.hpp"
#include "ncalg/random.hpp"

namespace ncalg {

/// Noncommutative power series modulo all terms of degree above `cap`.
class TruncSeries {
 public:
  /// Discards the terms of `body` above the cap. cap >= 1.
  TruncSeries(NcPoly body, std::size_t cap);

  static TruncSeries zero(AlgebraPtr algebra, std::size_t cap);
  static TruncSeries one(AlgebraPtr algebra, std::size_t cap);

  const NcPoly& body() const noexcept { return body_; }
  std::size_t cap() const noexcept { return cap_; }
  const AlgebraPtr& algebra() const noexcept { return body_.algebra(); }
  bool is_zero() const noexcept { return body_.is_zero(); }
  Scalar constant_term() const { return body_.constant_term(); }
  /// The series minus its constant term.
  TruncSeries radical_part() const;

  TruncSeries operator-() const { return TruncSeries(-body_, cap_); }
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Scalar& c);

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Scalar& c) { return a *= c; }
  friend TruncSeries operator*(const Scalar& c, TruncSeries a) { return a *= c; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

  std::string to_string() const { return body_.to_string(); }

 private:
  void require_same_cap(const TruncSeries& o) const;

  NcPoly body_;
  std::size_t cap_;
};

TruncSeries trunc_mul(const TruncSeries& f, const TruncSeries& g);
TruncSeries trunc_add(const TruncSeries& f, const TruncSeries& g);

/// The circle operation a + b - ab.
TruncSeries circle(const TruncSeries& a, const TruncSeries& b);

/// g = -(f + f^2 + ... + f^cap), the unique series with gf = fg = f + g.
/// Throws PreconditionError when f has a nonzero constant term.
TruncSeries quasi_inverse(const TruncSeries& f);

/// Random series with zero constant term: 1-4 terms of uniform degree in
/// [1, cap] over uniformly random words, nonzero coefficients.
TruncSeries random_radical_series(const AlgebraPtr& algebra, std::size_t cap, Rng& rng);

/// Square matrix over the truncated series ring, row-major.
class SeriesMatrix {
 public:
  SeriesMatrix(AlgebraPtr algebra, std::size_t n, std::size_t cap);
  static SeriesMatrix identity(AlgebraPtr algebra, std::size_t n, std::size_t cap);

  std::size_t size() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }
  const AlgebraPtr& algebra() const noexcept { return algebra_; }

  TruncSeries& at(std::size_t i, std::size_t j) { return entries_.at(i * n_ + j); }
  const TruncSeries& at(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }

  bool is_identity() const;

  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b);

  std::vector<std::string> format_rows() const;

 private:
  void require_compatible(const SeriesMatrix& o) const;

  AlgebraPtr algebra_;
  std::size_t n_;
  std::size_t cap_;
  std::vector<TruncSeries> entries_;
};

/// Inverse of I + N for N with zero constant terms: sum of (-N)^k, k <= cap.
/// Throws PreconditionError unless the constant-term matrix is the identity.
SeriesMatrix neumann_inverse(const SeriesMatrix& m);

/// I + N with every entry of N a random radical series.
SeriesMatrix random_unipotent(const AlgebraPtr& algebra, std::size_t n, std::size_t cap, Rng& rng);

struct DirectFinitenessResult {
  bool confirmed;                      // YX = I
  std::optional<SeriesMatrix> yx;      // the offending product when not confirmed
};

/// Given XY = I, checks YX = I. Throws PreconditionError if XY != I.
DirectFinitenessResult stable_finiteness_probe(const SeriesMatrix& x, const SeriesMatrix& y);

}  // namespace ncalg
