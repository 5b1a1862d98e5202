#include "doctest.h"

#include <algorithm>

#include "ncalg/errors.hpp"
#include "ncalg/random.hpp"
#include "support.hpp"

using namespace ncalg;
using testing::poly;

namespace {

NcPoly random_poly(const AlgebraPtr& alg, Rng& rng, std::size_t max_degree) {
  TermMap acc(alg);
  const auto terms = rng.between(0, 4);
  for (long long t = 0; t < terms; ++t) {
    std::vector<Letter> letters(static_cast<std::size_t>(rng.between(0, static_cast<long long>(max_degree))));
    for (auto& l : letters) l = static_cast<Letter>(rng.below(alg->alphabet.size()));
    acc.add(Word(letters), alg->field.random(rng, true));
  }
  return acc.to_poly();
}

Word random_word(Rng& rng, std::size_t max_degree) {
  std::vector<Letter> letters(static_cast<std::size_t>(rng.between(0, static_cast<long long>(max_degree))));
  for (auto& l : letters) l = static_cast<Letter>(rng.below(2));
  return Word(letters);
}

}  // namespace

TEST_CASE("prime test and field construction") {
  for (std::uint64_t p : {2u, 3u, 7u, 101u, 65537u}) CHECK(is_prime(p));
  for (std::uint64_t c : {0u, 1u, 4u, 91u, 561u, 65535u}) CHECK_FALSE(is_prime(c));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_THROWS_AS(FieldSpec::prime(8), PreconditionError);
  CHECK_THROWS_AS(FieldSpec::prime(1ULL << 63), PreconditionError);
  CHECK(FieldSpec::parse("Fp:101") == FieldSpec::prime(101));
  CHECK(FieldSpec::parse("Fp 7") == FieldSpec::prime(7));
  CHECK(FieldSpec::parse("Q").is_rationals());
  CHECK_THROWS(FieldSpec::parse("R"));
}

TEST_CASE("scalars stay canonical and obey the field axioms") {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar half = q.from_fraction(2, 4);
  CHECK(half.rational().get_num() == 1);
  CHECK(half.rational().get_den() == 2);
  CHECK(q.from_fraction(3, -6).to_string() == "-1/2");
  CHECK_THROWS_AS(q.from_fraction(1, 0), ArithmeticError);
  CHECK_THROWS_AS(q.zero().inverse(), ArithmeticError);

  const FieldSpec f7 = FieldSpec::prime(7);
  CHECK(f7.from_int(-1).residue() == 6);
  CHECK((f7.from_int(3) * f7.from_int(5)).residue() == 1);
  CHECK(f7.from_int(3).inverse().residue() == 5);
  CHECK_THROWS_AS(f7.one() + q.one(), MismatchError);

  for (const FieldSpec& f : {q, f7, FieldSpec::prime(101)}) {
    Rng rng(11);
    for (int t = 0; t < 500; ++t) {
      const Scalar a = f.random(rng, false), b = f.random(rng, false), c = f.random(rng, false);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      if (f.is_rationals()) {
        mpq_class r = (a * b + c).rational();
        mpq_class canon = r;
        canon.canonicalize();
        CHECK(cmp(r.get_num(), canon.get_num()) == 0);
        CHECK(r.get_den() > 0);
      }
    }
  }
}

TEST_CASE("deglex order") {
  const std::vector<Letter> rank{0, 1};
  const Word x{0}, y{1}, yxy{1, 0, 1}, xy{0, 1}, yx{1, 0};
  CHECK(deglex_compare(x, yxy, rank) < 0);
  CHECK(deglex_compare(xy, yx, rank) < 0);
  CHECK(deglex_compare(yx, yx, rank) == 0);
  // Reversing the letter order flips equal-degree comparisons.
  const std::vector<Letter> reversed{1, 0};
  CHECK(deglex_compare(xy, yx, reversed) > 0);

  SUBCASE("sorted words of degree at most 2") {
    std::vector<Word> words{Word{}, x, y, Word{0, 0}, xy, yx, Word{1, 1}};
    std::vector<Word> shuffled(words.rbegin(), words.rend());
    std::sort(shuffled.begin(), shuffled.end(), [&](const Word& a, const Word& b) { return deglex_compare(a, b, rank) < 0; });
    // Oracle: sort by (length, string) on "x" < "y".
    auto key = [](const Word& w) {
      std::string s;
      for (auto l : w) s += l == 0 ? 'x' : 'y';
      return std::make_pair(s.size(), s);
    };
    std::vector<Word> expected = words;
    std::sort(expected.begin(), expected.end(), [&](const Word& a, const Word& b) { return key(a) < key(b); });
    CHECK(shuffled == expected);
    CHECK(shuffled == words);
  }

  SUBCASE("total and compatible with multiplication") {
    Rng rng(5);
    for (int t = 0; t < 2000; ++t) {
      const Word u = random_word(rng, 5), v = random_word(rng, 5), w = random_word(rng, 3);
      const auto c = deglex_compare(u, v, rank);
      CHECK((c == 0) == (u == v));
      CHECK((deglex_compare(v, u, rank) < 0) == (c > 0));
      if (c < 0) {
        CHECK(deglex_compare(w * u, w * v, rank) < 0);
        CHECK(deglex_compare(u * w, v * w, rank) < 0);
      }
    }
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({"x", "x"}), PreconditionError);
  CHECK_THROWS_AS(Alphabet({"x", "2"}), PreconditionError);
  CHECK_THROWS_AS(Alphabet({"x", "y"}, {0, 0}), PreconditionError);
  const Alphabet a({"x", "y"});
  CHECK(a.format(a.parse_word("x*y*x")) == "x*y*x");
  CHECK(a.format(Word{}) == "1");
}

TEST_CASE("polynomial arithmetic") {
  const AlgebraPtr q = make_algebra(FieldSpec::rationals(), {"x", "y"});
  const AlgebraPtr f7 = make_algebra(FieldSpec::prime(7), {"x", "y"});

  CHECK(poly(q, "y*x*y") * poly(q, "x") == poly(q, "y*x*y*x"));
  CHECK((poly(q, "x + y") * NcPoly(q)).is_zero());

  SUBCASE("hand expansion oracle") {
    const NcPoly p = poly(q, "(x + y)*(x + y)");
    CHECK(testing::to_spoly(p) == oracle::SPoly{{"xx", 1}, {"xy", 1}, {"yx", 1}, {"yy", 1}});
    const NcPoly m = poly(f7, "(x+y)*(x-y)");
    CHECK(m.size() == 4);
    CHECK(m.coefficient(Word{0, 0}).residue() == 1);
    CHECK(m.coefficient(Word{0, 1}).residue() == 6);
    CHECK(m.coefficient(Word{1, 0}).residue() == 1);
    CHECK(m.coefficient(Word{1, 1}).residue() == 6);
  }

  SUBCASE("leading term first and degree bound") {
    const NcPoly p = poly(q, "x - y*x*y + 3");
    CHECK(p.leading().first == Word{1, 0, 1});
    CHECK(p.leading().second == q->field.from_int(-1));
    CHECK(*p.degree() == 3);
    CHECK(*p.low_degree() == 0);
    CHECK((poly(q, "x*y") * poly(q, "y + x")).degree() == 3u);
  }

  SUBCASE("mismatched algebras") {
    CHECK_THROWS_AS(poly(q, "x") + poly(f7, "x"), MismatchError);
    const AlgebraPtr xyz = make_algebra(FieldSpec::rationals(), {"x", "y", "z"});
    CHECK_THROWS_AS(poly(q, "x") * poly(xyz, "x"), MismatchError);
  }

  SUBCASE("ring axioms on random triples") {
    for (const AlgebraPtr& alg : {q, f7}) {
      Rng rng(2024);
      const NcPoly one = NcPoly::constant(alg, alg->field.one());
      for (int t = 0; t < 500; ++t) {
        const NcPoly a = random_poly(alg, rng, 4), b = random_poly(alg, rng, 4), c = random_poly(alg, rng, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(one * a == a);
        CHECK(a * one == a);
        CHECK((a - a).is_zero());
      }
    }
  }

  SUBCASE("product agrees with the string oracle") {
    Rng rng(8);
    for (int t = 0; t < 200; ++t) {
      const NcPoly a = random_poly(q, rng, 4), b = random_poly(q, rng, 4);
      CHECK(testing::to_spoly(a * b) == oracle::product(testing::to_spoly(a), testing::to_spoly(b)));
      CHECK(testing::to_spoly(multiply(a, b, 3)) == oracle::product(testing::to_spoly(a), testing::to_spoly(b), 3));
    }
  }
}

TEST_CASE("parser") {
  const AlgebraPtr q = make_algebra(FieldSpec::rationals(), {"x", "y"});
  const AlgebraPtr f7 = make_algebra(FieldSpec::prime(7), {"x", "y"});

  const NcPoly rel = poly(q, "y*x*y - x");
  CHECK(testing::to_spoly(rel) == oracle::SPoly{{"yxy", 1}, {"x", -1}});
  CHECK(poly(q, "0").is_zero());
  CHECK(poly(q, "  2/4 * x ") == poly(q, "1/2*x"));
  CHECK(poly(q, "-(x - y)") == poly(q, "y - x"));
  CHECK(poly(q, "--x") == poly(q, "x"));
  CHECK(poly(q, "y*x*y - x").to_string() == "y*x*y - x");
  CHECK(poly(q, "1/3 - 2*x + x*y*x").to_string() == "x*y*x - 2*x + 1/3");
  CHECK(poly(f7, "1/3*x").to_string() == "5*x");

  auto column_of = [&](const std::string& text, const AlgebraPtr& alg) -> std::size_t {
    try {
      parse_poly(text, alg);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("x y", q) == 3);
  CHECK(column_of("x*z", q) == 3);
  CHECK(column_of("x + 1/0", q) == 7);
  CHECK(column_of("1/7*x", f7) == 3);
  CHECK(column_of("(x + y", q) == 7);
  CHECK(column_of("x +", q) == 4);
  CHECK(column_of("", q) == 1);
  CHECK(column_of("2x", q) != 0);

  SUBCASE("round trip") {
    for (const AlgebraPtr& alg : {q, f7}) {
      Rng rng(77);
      for (int t = 0; t < 500; ++t) {
        const NcPoly p = random_poly(alg, rng, 5);
        CHECK(parse_poly(p.to_string(), alg) == p);
      }
    }
  }
}
