#include "ncalg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "ncalg/errors.hpp"
#include "ncalg/parser.hpp"

namespace ncalg {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment stripped
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

class PresentationReader {
 public:
  explicit PresentationReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::size_t number = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (!trim(raw).empty()) lines_.push_back({number, raw});
    }
  }

  Presentation read() {
    for (const Line& line : lines_) handle(line);
    if (gens_.empty()) throw ParseError("missing 'gens' declaration", 0, 1);
    std::vector<RewriteRule> rules;
    for (auto& [line, rule] : rules_) rules.push_back(rule);
    try {
      RewriteSystem sys(algebra(), std::move(rules), truncation_);
      return Presentation{std::move(sys), std::move(witness_)};
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), 0, 1);
    }
  }

 private:
  [[noreturn]] static void fail(const Line& line, const std::string& what, std::size_t column = 1) {
    throw ParseError(what, line.number, column);
  }

  const AlgebraPtr& algebra() {
    if (!algebra_) {
      try {
        algebra_ = make_algebra(field_, order_ ? Alphabet(gens_, *order_) : Alphabet(gens_));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), gens_line_, 1);
      }
    }
    return algebra_;
  }

  NcPoly expression(const Line& line, std::size_t offset, std::string_view text) {
    try {
      return parse_poly(text, algebra());
    } catch (const ParseError& e) {
      fail(line, e.detail(), offset + e.column());
    }
  }

  void require_gens(const Line& line, const std::string& keyword) {
    if (gens_.empty()) fail(line, "'" + keyword + "' before 'gens'");
  }

  void handle(const Line& line) {
    const std::string_view text = line.text;
    std::size_t start = 0;
    while (std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    std::size_t end = start;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string keyword(text.substr(start, end - start));
    const std::size_t rest_offset = end;
    const std::string_view rest = text.substr(end);

    if (keyword == "field") {
      if (algebra_ || !gens_.empty()) fail(line, "'field' must precede 'gens'");
      try {
        field_ = FieldSpec::parse(trim(rest));
      } catch (const Error& e) {
        fail(line, e.what(), rest_offset + 1);
      }
    } else if (keyword == "gens") {
      if (!gens_.empty()) fail(line, "duplicate 'gens' declaration");
      gens_ = split_ws(rest);
      gens_line_ = line.number;
      if (gens_.empty()) fail(line, "'gens' needs at least one generator");
    } else if (keyword == "order") {
      require_gens(line, keyword);
      if (algebra_) fail(line, "'order' must come before relations");
      std::vector<Letter> rank(gens_.size());
      const auto names = split_ws(rest);
      if (names.size() != gens_.size()) fail(line, "'order' must list every generator once");
      std::vector<bool> used(gens_.size(), false);
      for (std::size_t pos = 0; pos < names.size(); ++pos) {
        auto it = std::find(gens_.begin(), gens_.end(), names[pos]);
        if (it == gens_.end()) fail(line, "unknown generator '" + names[pos] + "' in 'order'");
        const auto g = static_cast<std::size_t>(it - gens_.begin());
        if (used[g]) fail(line, "generator '" + names[pos] + "' repeated in 'order'");
        used[g] = true;
        rank[g] = static_cast<Letter>(pos);
      }
      order_ = std::move(rank);
    } else if (keyword == "truncate") {
      const auto toks = split_ws(rest);
      if (toks.size() != 1 || !std::all_of(toks[0].begin(), toks[0].end(), ::isdigit) || toks[0].size() > 6)
        fail(line, "'truncate' needs a positive integer cap", rest_offset + 1);
      truncation_ = std::stoul(toks[0]);
      if (*truncation_ == 0) fail(line, "'truncate' needs a positive integer cap", rest_offset + 1);
    } else if (keyword == "rel") {
      require_gens(line, keyword);
      NcPoly rel = expression(line, rest_offset, rest);
      try {
        rules_.emplace_back(line.number, orient(rel));
      } catch (const Error& e) {
        fail(line, e.what(), rest_offset + 1);
      }
    } else if (keyword == "rule") {
      require_gens(line, keyword);
      const auto arrow = rest.find("->");
      if (arrow == std::string_view::npos) fail(line, "'rule' needs 'lhs -> rhs'", rest_offset + 1);
      NcPoly lhs = expression(line, rest_offset, rest.substr(0, arrow));
      if (lhs.size() != 1 || !lhs.leading().second.is_one() || lhs.leading().first.empty())
        fail(line, "rule lhs must be a single nonempty word", rest_offset + 1);
      NcPoly rhs = expression(line, rest_offset + arrow + 2, rest.substr(arrow + 2));
      rules_.emplace_back(line.number, RewriteRule{lhs.leading().first, std::move(rhs)});
    } else if (keyword == "witness") {
      require_gens(line, keyword);
      if (witness_) fail(line, "duplicate 'witness' block");
      read_witness(line, rest_offset, rest);
    } else {
      fail(line, "unknown directive '" + keyword + "'", start + 1);
    }
  }

  void read_witness(const Line& line, std::size_t offset, std::string_view rest) {
    static const std::regex key_re(R"(([A-Za-z_]\w*)\s*=)");
    const std::string text(rest);
    std::vector<std::pair<std::string, std::size_t>> keys;  // name, position after '='
    std::vector<std::size_t> key_starts;
    for (std::sregex_iterator it(text.begin(), text.end(), key_re), end; it != end; ++it) {
      keys.emplace_back((*it)[1].str(), static_cast<std::size_t>(it->position() + it->length()));
      key_starts.push_back(static_cast<std::size_t>(it->position()));
    }
    if (keys.empty() || !trim(std::string_view(text).substr(0, key_starts[0])).empty())
      fail(line, "witness expects x=<expr> y=<expr> z=<expr> a=<expr> b=<expr>", offset + 1);
    std::map<std::string, NcPoly> parts;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      const auto& [name, from] = keys[k];
      const std::size_t to = k + 1 < keys.size() ? key_starts[k + 1] : text.size();
      if (name != "x" && name != "y" && name != "z" && name != "a" && name != "b")
        fail(line, "unknown witness field '" + name + "'", offset + key_starts[k] + 1);
      if (parts.contains(name)) fail(line, "witness field '" + name + "' given twice", offset + key_starts[k] + 1);
      parts.emplace(name, expression(line, offset + from, std::string_view(text).substr(from, to - from)));
    }
    for (const char* name : {"x", "y", "z", "a", "b"})
      if (!parts.contains(name)) fail(line, std::string("witness misses field '") + name + "'", offset + 1);
    witness_ = LemmaWitness{parts.at("x"), parts.at("y"), parts.at("z"), parts.at("a"), parts.at("b")};
  }

  std::vector<Line> lines_;
  FieldSpec field_;
  std::vector<std::string> gens_;
  std::size_t gens_line_ = 0;
  std::optional<std::vector<Letter>> order_;
  std::optional<std::size_t> truncation_;
  AlgebraPtr algebra_;
  std::vector<std::pair<std::size_t, RewriteRule>> rules_;
  std::optional<LemmaWitness> witness_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return PresentationReader(text).read(); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Presentation load_presentation(const std::filesystem::path& path) {
  try {
    return parse_presentation(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.detail(), e.line(), e.column());
  }
}

Assignment parse_assignment(std::string_view json_text, const RewriteSystem& sys) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("assignment is not valid JSON: ") + e.what(), 0, e.byte);
  }
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("assignment misses '") + key + "'", 0, 1);
    return doc.at(key);
  };
  const auto& field_node = require("field");
  const auto& n_node = require("n");
  const auto& assign = require("assign");
  if (!field_node.is_string() || !n_node.is_number_unsigned() || !assign.is_object())
    throw ParseError("assignment needs string 'field', nonnegative integer 'n' and object 'assign'", 0, 1);
  const FieldSpec field = FieldSpec::parse(field_node.get<std::string>());
  if (!(field == sys.field()))
    throw MismatchError("assignment field " + field.to_string() + " differs from presentation field " +
                        sys.field().to_string());
  const auto n = n_node.get<std::size_t>();
  Assignment out;
  for (const auto& [name, entries] : assign.items()) {
    if (!sys.alphabet().index_of(name)) throw ParseError("assignment names unknown generator '" + name + "'", 0, 1);
    if (!entries.is_array() || entries.size() != n * n)
      throw ParseError("generator '" + name + "' needs " + std::to_string(n * n) + " entries", 0, 1);
    std::vector<long long> values;
    for (const auto& v : entries) {
      if (!v.is_number_integer()) throw ParseError("generator '" + name + "' has a non-integer entry", 0, 1);
      values.push_back(v.get<long long>());
    }
    out.emplace(name, ExactMatrix::from_integers(field, n, n, values));
  }
  for (const auto& g : sys.alphabet().names())
    if (!out.contains(g)) throw ParseError("assignment misses generator '" + g + "'", 0, 1);
  return out;
}

Assignment load_assignment(const std::filesystem::path& path, const RewriteSystem& sys) {
  return parse_assignment(read_file(path), sys);
}

}  // namespace ncalg
