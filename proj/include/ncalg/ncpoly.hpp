#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/field.hpp"
#include "ncalg/word.hpp"

namespace ncalg {

/// The free associative algebra F<generators>: a field plus an alphabet.
struct FreeAlgebra {
  FieldSpec field;
  Alphabet alphabet;

  friend bool operator==(const FreeAlgebra&, const FreeAlgebra&) = default;
};

using AlgebraPtr = std::shared_ptr<const FreeAlgebra>;

AlgebraPtr make_algebra(FieldSpec field, Alphabet alphabet);
AlgebraPtr make_algebra(FieldSpec field, std::vector<std::string> generator_names);

/// Throws MismatchError unless both pointers denote the same algebra.
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

class NcPoly;

/// Mutable accumulator of terms keyed by word in descending deglex order.
/// Zero coefficients are erased as they appear.
class TermMap {
 public:
  using Map = std::map<Word, Scalar, DeglexGreater>;

  explicit TermMap(AlgebraPtr algebra);

  void add(const Word& w, const Scalar& c);
  void add(Word&& w, const Scalar& c);
  void add(const NcPoly& p);

  Map& map() noexcept { return terms_; }
  const Map& map() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  NcPoly to_poly() const;

 private:
  AlgebraPtr algebra_;
  Map terms_;
};

/// Finite linear combination of words. Terms are stored leading term first
/// (descending deglex); no stored coefficient is zero.
class NcPoly {
 public:
  using Term = std::pair<Word, Scalar>;

  /// The zero polynomial.
  explicit NcPoly(AlgebraPtr algebra);

  static NcPoly monomial(AlgebraPtr algebra, Word w, Scalar c);
  static NcPoly monomial(AlgebraPtr algebra, Word w);
  static NcPoly constant(AlgebraPtr algebra, Scalar c);
  static NcPoly generator(AlgebraPtr algebra, Letter g);
  /// Merges repeated words and drops zeros.
  static NcPoly from_terms(AlgebraPtr algebra, std::vector<Term> terms);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const FieldSpec& field() const noexcept { return algebra_->field; }
  const Alphabet& alphabet() const noexcept { return algebra_->alphabet; }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Degree of the leading term; nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  /// Smallest degree of any term; nullopt for zero.
  std::optional<std::size_t> low_degree() const;
  const Term& leading() const;

  Scalar coefficient(const Word& w) const;
  Scalar constant_term() const;
  bool is_constant() const { return is_zero() || (size() == 1 && terms_[0].first.empty()); }

  /// Drops every term of degree above `max_degree`.
  NcPoly truncated(std::size_t max_degree) const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }

  friend bool operator==(const NcPoly& a, const NcPoly& b);

  /// Canonical text in the expression grammar, e.g. "x*y*x - 2*x + 1/3".
  std::string to_string() const;

 private:
  friend class TermMap;

  AlgebraPtr algebra_;
  std::vector<Term> terms_;
};

/// Product a*b; with a cap, terms of degree above it are never formed.
NcPoly multiply(const NcPoly& a, const NcPoly& b, std::optional<std::size_t> cap = std::nullopt);

/// Commutator ab - ba.
NcPoly commutator(const NcPoly& a, const NcPoly& b);

}  // namespace ncalg
