#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/field.hpp"
#include "ncalg/random.hpp"

namespace ncalg {

/// Dense matrix over a FieldSpec, row-major.
class ExactMatrix {
 public:
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(FieldSpec field, std::size_t n);
  /// From integer entries, reduced into the field.
  static ExactMatrix from_integers(FieldSpec field, std::size_t rows, std::size_t cols,
                                   const std::vector<long long>& entries);
  /// The matrix unit E_{ij} (0-based indices).
  static ExactMatrix unit(FieldSpec field, std::size_t n, std::size_t i, std::size_t j);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

  ExactMatrix transpose() const;
  /// [this | other], column concatenation.
  ExactMatrix hconcat(const ExactMatrix& other) const;
  /// this stacked on top of other.
  ExactMatrix vconcat(const ExactMatrix& other) const;
  ExactMatrix columns(std::size_t first, std::size_t count) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Scalar& c, ExactMatrix a);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::vector<std::vector<std::string>> format() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Rank: modular elimination over F_p, fraction-free (Bareiss) elimination on
/// the denominator-cleared integer matrix over Q.
std::size_t exact_rank(const ExactMatrix& m);

/// dim(Im X ∩ Im Z) = rank X + rank Z - rank [X | Z]. Requires equal row counts.
std::size_t image_intersection_dim(const ExactMatrix& x, const ExactMatrix& z);

/// Columns forming a basis of Im X ∩ Im Z, by the Zassenhaus algorithm.
ExactMatrix intersection_basis(const ExactMatrix& x, const ExactMatrix& z);

/// Reduced row echelon form (Gauss-Jordan).
ExactMatrix row_echelon(const ExactMatrix& m);

/// Uniform entries (see FieldSpec::random), or with `target_rank` r the
/// product of random n x r and r x n factors resampled until its rank is r.
/// Deterministic in `seed`. Throws BudgetExceeded after 1000 failed draws.
ExactMatrix random_matrix(const FieldSpec& field, std::size_t n, std::optional<std::size_t> target_rank,
                          std::uint64_t seed);
ExactMatrix random_matrix(const FieldSpec& field, std::size_t n, std::optional<std::size_t> target_rank, Rng& rng);

}  // namespace ncalg
