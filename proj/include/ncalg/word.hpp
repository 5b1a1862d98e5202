#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncalg {

using Letter = std::uint32_t;

/// Element of the free monoid: a sequence of generator indices.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t degree() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Letters [pos, pos + len).
  Word sub(std::size_t pos, std::size_t len) const;

  /// Position of the first occurrence of `factor` at or after `from`.
  std::optional<std::size_t> find(const Word& factor, std::size_t from = 0) const;
  bool contains(const Word& factor) const { return find(factor).has_value(); }

  /// prefix * replacement * suffix, where [pos, pos + len) is cut out.
  Word splice(std::size_t pos, std::size_t len, const Word& replacement) const;

  Word& operator*=(const Word& o);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Named generators plus the letter order used by deglex. rank[g] is the
/// position of generator g in the order; declaration order by default.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::vector<std::string> names, std::vector<Letter> rank);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Letter g) const { return names_.at(g); }
  std::optional<Letter> index_of(std::string_view name) const;
  std::span<const Letter> rank() const noexcept { return rank_; }
  /// Generators listed from smallest to largest.
  std::vector<Letter> letters_in_order() const;

  /// Parses "x*y*x" (or "1" for the empty word).
  Word parse_word(std::string_view text) const;
  /// "x*y*x"; the empty word prints as "1".
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Letter> rank_;
};

/// Degree first, then lexicographic with letter g weighted by rank[g].
std::strong_ordering deglex_compare(const Word& u, const Word& v, std::span<const Letter> rank);

/// Strict "greater" comparator for containers sorted leading-term first.
struct DeglexGreater {
  std::span<const Letter> rank;
  bool operator()(const Word& u, const Word& v) const { return deglex_compare(u, v, rank) > 0; }
};

}  // namespace ncalg
