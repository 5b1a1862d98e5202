#include "ncalg/matrix.hpp"

#include <utility>

#include "ncalg/errors.hpp"

namespace ncalg {

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field() == b.field())) throw MismatchError("matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw MismatchError("matrix dimensions differ");
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, e = p - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(const ExactMatrix& m) {
  const std::uint64_t p = m.field().modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = m.at(i, j).residue();

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::uint64_t inv = inv_mod(a[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t factor = mul_mod(a[i * cols + c], inv, p);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mul_mod(factor, a[r * cols + j], p);
        a[i * cols + j] = a[i * cols + j] >= sub ? a[i * cols + j] - sub : a[i * cols + j] + (p - sub);
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank_rational(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clearing denominators row by row does not change the rank.
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).rational();
      a[i * cols + j] = q.get_num() * (lcm / q.get_den());
    }
  }

  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const mpz_class pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pivot * a[i * cols + j] - lead * a[r * cols + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i * cols + j] = std::move(v);
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

ExactMatrix ExactMatrix::from_integers(FieldSpec field, std::size_t rows, std::size_t cols,
                                       const std::vector<long long>& entries) {
  if (entries.size() != rows * cols)
    throw MismatchError("expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
  ExactMatrix m(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.entries_[k] = field.from_int(entries[k]);
  return m;
}

ExactMatrix ExactMatrix::unit(FieldSpec field, std::size_t n, std::size_t i, std::size_t j) {
  ExactMatrix m(field, n, n);
  m.at(i, j) = field.one();
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix ExactMatrix::hconcat(const ExactMatrix& other) const {
  if (!(field_ == other.field_)) throw MismatchError("matrices over different fields");
  if (rows_ != other.rows_) throw MismatchError("row counts differ");
  ExactMatrix out(field_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, cols_ + j) = other.at(i, j);
  }
  return out;
}

ExactMatrix ExactMatrix::vconcat(const ExactMatrix& other) const {
  if (!(field_ == other.field_)) throw MismatchError("matrices over different fields");
  if (cols_ != other.cols_) throw MismatchError("column counts differ");
  ExactMatrix out(field_, rows_ + other.rows_, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(other.entries_.begin(), other.entries_.end(), out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return out;
}

ExactMatrix ExactMatrix::columns(std::size_t first, std::size_t count) const {
  ExactMatrix out(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.field_ == b.field_)) throw MismatchError("matrices over different fields");
  if (a.cols_ != b.rows_) throw MismatchError("inner dimensions differ");
  ExactMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

ExactMatrix operator*(const Scalar& c, ExactMatrix a) {
  for (auto& e : a.entries_) e *= c;
  return a;
}

std::vector<std::vector<std::string>> ExactMatrix::format() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
  return out;
}

std::size_t exact_rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m.field().is_rationals() ? rank_rational(m) : rank_mod_p(m);
}

std::size_t image_intersection_dim(const ExactMatrix& x, const ExactMatrix& z) {
  if (x.rows() != z.rows()) throw MismatchError("row counts differ");
  return exact_rank(x) + exact_rank(z) - exact_rank(x.hconcat(z));
}

ExactMatrix row_echelon(const ExactMatrix& m) {
  ExactMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    const Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Scalar factor = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(r, j);
    }
    ++r;
  }
  return a;
}

ExactMatrix intersection_basis(const ExactMatrix& x, const ExactMatrix& z) {
  if (x.rows() != z.rows()) throw MismatchError("row counts differ");
  const std::size_t n = x.rows();
  // Rows [x_i | x_i] and [z_j | 0]; after elimination, the rows whose left
  // half vanishes carry a basis of the intersection in their right half.
  const ExactMatrix xt = x.transpose();
  const ExactMatrix zt = z.transpose();
  const ExactMatrix top = xt.hconcat(xt);
  const ExactMatrix bottom = zt.hconcat(ExactMatrix(z.field(), zt.rows(), n));
  const ExactMatrix e = row_echelon(top.vconcat(bottom));

  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    bool left_zero = true, right_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      left_zero = left_zero && e.at(i, j).is_zero();
      right_zero = right_zero && e.at(i, n + j).is_zero();
    }
    if (left_zero && !right_zero) picked.push_back(i);
  }
  ExactMatrix basis(x.field(), n, picked.size());
  for (std::size_t k = 0; k < picked.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) basis.at(j, k) = e.at(picked[k], n + j);
  return basis;
}

ExactMatrix random_matrix(const FieldSpec& field, std::size_t n, std::optional<std::size_t> target_rank,
                          std::uint64_t seed) {
  Rng rng(seed);
  return random_matrix(field, n, target_rank, rng);
}

ExactMatrix random_matrix(const FieldSpec& field, std::size_t n, std::optional<std::size_t> target_rank, Rng& rng) {
  auto uniform = [&](std::size_t rows, std::size_t cols) {
    ExactMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = field.random(rng, false);
    return m;
  };
  if (!target_rank) return uniform(n, n);
  const std::size_t r = *target_rank;
  if (r > n) throw PreconditionError("target rank exceeds matrix size");
  if (r == 0) return ExactMatrix(field, n, n);
  constexpr int kRetries = 1000;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    ExactMatrix m = uniform(n, r) * uniform(r, n);
    if (exact_rank(m) == r) return m;
  }
  throw BudgetExceeded("could not draw a rank-" + std::to_string(r) + " matrix over " + field.to_string());
}

}  // namespace ncalg
