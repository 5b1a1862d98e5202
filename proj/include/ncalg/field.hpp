#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace ncalg {

class Scalar;
class Rng;

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The coefficient field: the rationals or a prime field F_p with p < 2^63.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  FieldSpec() = default;  // the rationals

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "Fp:<p>" and "Fp <p>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// "Q" or "Fp:<p>".
  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const mpz_class& v) const;
  /// num/den reduced into the field; throws ArithmeticError if den is zero in the field.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  /// Uniform residue for F_p; for Q a small rational num/den with |num| <= 9, 1 <= den <= 4.
  Scalar random(Rng& rng, bool nonzero) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t modulus_ = 0;
};

/// Exact element of a FieldSpec. Rationals are kept canonical (lowest terms,
/// positive denominator), residues in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  const FieldSpec& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Requires a rational scalar.
  const mpq_class& rational() const;
  /// Requires a prime-field scalar.
  std::uint64_t residue() const;

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "-3/4" for rationals, the residue in [0, p) for prime fields.
  std::string to_string() const;

 private:
  friend class FieldSpec;
  Scalar(FieldSpec f, std::uint64_t r) : field_(f), value_(r) {}
  Scalar(FieldSpec f, mpq_class q) : field_(f), value_(std::move(q)) {}

  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace ncalg
