#include "ncalg/field.hpp"

#include <cctype>
#include <charconv>

#include "ncalg/errors.hpp"
#include "ncalg/random.hpp"

namespace ncalg {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 63)) throw PreconditionError("prime modulus must fit in 63 bits");
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.substr(0, 2) == "Fp" && text.size() > 2 && (text[2] == ':' || std::isspace(static_cast<unsigned char>(text[2])))) {
    std::string_view digits = trim(text.substr(3));
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      throw ParseError("bad prime modulus '" + std::string(digits) + "'", 0, 4);
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)", 0, 1);
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const { return from_integer(mpz_class(static_cast<long>(v))); }

Scalar FieldSpec::from_integer(const mpz_class& v) const {
  if (is_rationals()) return Scalar(*this, mpq_class(v));
  return Scalar(*this, reduce_mpz(v, modulus_));
}

Scalar FieldSpec::from_fraction(const mpz_class& num, const mpz_class& den) const {
  Scalar d = from_integer(den);
  if (d.is_zero()) throw ArithmeticError("division by zero in " + to_string());
  return from_integer(num) / d;
}

Scalar FieldSpec::random(Rng& rng, bool nonzero) const {
  if (!is_rationals()) {
    if (nonzero) return Scalar(*this, 1 + rng.below(modulus_ - 1));
    return Scalar(*this, rng.below(modulus_));
  }
  long long num = nonzero ? rng.between(1, 18) : rng.between(0, 18);
  if (nonzero) num = num <= 9 ? num : 9 - num;  // 1..9 or -1..-9
  else num -= 9;
  const long den = static_cast<long>(rng.between(1, 4));
  return from_fraction(mpz_class(static_cast<long>(num)), mpz_class(den));
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw MismatchError("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw PreconditionError("not a rational scalar");
}

std::uint64_t Scalar::residue() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw PreconditionError("not a prime-field scalar");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t p = field_.modulus();
    return Scalar(field_, pow_mod(*r, p - 2, p));
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return Scalar(field_, std::move(q));
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<std::uint64_t>(&value_))
    return Scalar(field_, *r == 0 ? 0 : field_.modulus() - *r);
  return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t p = field_.modulus();
    const std::uint64_t s = std::get<std::uint64_t>(o.value_);
    *r = *r >= p - s ? *r - (p - s) : *r + s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    *r = mul_mod(*r, std::get<std::uint64_t>(o.value_), field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace ncalg
