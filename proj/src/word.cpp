#include "ncalg/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "ncalg/errors.hpp"

namespace ncalg {

Word Word::sub(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::optional<std::size_t> Word::find(const Word& factor, std::size_t from) const {
  if (factor.degree() > degree()) return std::nullopt;
  auto it = std::search(letters_.begin() + std::min(from, degree()), letters_.end(),
                        factor.letters_.begin(), factor.letters_.end());
  if (it == letters_.end() && !factor.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

Word Word::splice(std::size_t pos, std::size_t len, const Word& replacement) const {
  std::vector<Letter> out;
  out.reserve(degree() - len + replacement.degree());
  out.insert(out.end(), letters_.begin(), letters_.begin() + pos);
  out.insert(out.end(), replacement.letters_.begin(), replacement.letters_.end());
  out.insert(out.end(), letters_.begin() + pos + len, letters_.end());
  return Word(std::move(out));
}

Word& Word::operator*=(const Word& o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  rank_.resize(names_.size());
  std::iota(rank_.begin(), rank_.end(), Letter{0});
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !std::all_of(n.begin(), n.end(), [](unsigned char c) { return std::isalpha(c) || c == '_'; }))
      throw PreconditionError("generator name '" + n + "' must be alphabetic");
    if (!seen.insert(n).second) throw PreconditionError("duplicate generator name '" + n + "'");
  }
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<Letter> rank) : Alphabet(std::move(names)) {
  std::vector<Letter> sorted = rank;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Letter> identity(names_.size());
  std::iota(identity.begin(), identity.end(), Letter{0});
  if (sorted != identity) throw PreconditionError("letter order is not a permutation of the generators");
  rank_ = std::move(rank);
}

std::optional<Letter> Alphabet::index_of(std::string_view name) const {
  for (Letter g = 0; g < names_.size(); ++g)
    if (names_[g] == name) return g;
  return std::nullopt;
}

std::vector<Letter> Alphabet::letters_in_order() const {
  std::vector<Letter> out(names_.size());
  for (Letter g = 0; g < names_.size(); ++g) out[rank_[g]] = g;
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  std::vector<Letter> letters;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("trailing input after empty word '1'", 0, i + 1);
    return Word();
  }
  while (true) {
    skip_ws();
    const std::size_t start = i;
    while (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (start == i) throw ParseError("expected generator name", 0, start + 1);
    const std::string_view name = text.substr(start, i - start);
    auto g = index_of(name);
    if (!g) throw ParseError("unknown generator '" + std::string(name) + "'", 0, start + 1);
    letters.push_back(*g);
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '*') throw ParseError("expected '*' between letters", 0, i + 1);
    ++i;
  }
  return Word(std::move(letters));
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (i) out += '*';
    out += name(w[i]);
  }
  return out;
}

std::strong_ordering deglex_compare(const Word& u, const Word& v, std::span<const Letter> rank) {
  if (auto c = u.degree() <=> v.degree(); c != 0) return c;
  for (std::size_t i = 0; i < u.degree(); ++i) {
    if (u[i] == v[i]) continue;
    return rank[u[i]] <=> rank[v[i]];
  }
  return std::strong_ordering::equal;
}

}  // namespace ncalg
