#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "urep/words.hpp"

using namespace urep;

namespace {

Word w(std::string_view s) { return parse_word(s, true); }

oracle::Letters letters(const Word& x) { return {x.begin(), x.end()}; }

}  // namespace

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(w("347439")), w("123214"));
  EXPECT_EQ(reduce(Word{}), Word{});
  EXPECT_EQ(reduce(w("98")), w("21"));
}

TEST(Reduce, Idempotent) {
  std::mt19937 rng(7);
  for (int t = 0; t < 500; ++t) {
    std::vector<Letter> v(rng() % 9);
    for (auto& c : v) c = 1 + rng() % 20;
    const Word x(v);
    EXPECT_EQ(reduce(reduce(x)), reduce(x));
    EXPECT_EQ(reduce(x).size(), x.size());
  }
}

TEST(Restrict, Examples) {
  const Word x = w("4513113458");
  EXPECT_EQ(restrict(x, std::set<Letter>{1, 3, 5}), w("5131135"));
  EXPECT_EQ(restrict(x, alphabet(x)), x);
  EXPECT_TRUE(restrict(x, std::set<Letter>{}).empty());
  EXPECT_EQ(restrict(reverse(x), std::set<Letter>{1, 5}), reverse(restrict(x, std::set<Letter>{1, 5})));
}

TEST(Alphabet, Examples) {
  EXPECT_EQ(alphabet(w("4513113458")), (std::set<Letter>{1, 3, 4, 5, 8}));
  EXPECT_TRUE(alphabet(Word{}).empty());
  EXPECT_EQ(alphabet(w("777")), (std::set<Letter>{7}));
}

TEST(Match, Examples) {
  const Pattern p11 = Pattern::parse("11"), p12 = Pattern::parse("12");
  EXPECT_FALSE(has_match(w("1213"), p11));
  EXPECT_TRUE(has_match(w("1123"), p11));
  EXPECT_FALSE(has_match(w("121212"), p11));
  EXPECT_FALSE(has_match(w("21"), p12));
  EXPECT_FALSE(occurs(w("21"), p12));
  EXPECT_TRUE(occurs(w("2131"), p12));
}

TEST(Match, AgreesWithOracleOnSmallWords) {
  for (const char* u : {"1", "11", "12", "21", "111", "121", "212", "1212"}) {
    const Pattern p = Pattern::parse(u);
    const oracle::Letters ul = letters(p.word());
    oracle::for_each_word(3, 6, [&](const oracle::Letters& v) {
      const Word x(std::vector<Letter>(v.begin(), v.end()));
      ASSERT_EQ(has_match(x, p), oracle::has_factor(v, ul)) << to_string(x) << " / " << u;
      ASSERT_EQ(occurs(x, p), oracle::has_subsequence(v, ul)) << to_string(x) << " / " << u;
    });
  }
}

TEST(Match, TwoLetterWordsMatchIffOccur) {
  const Pattern p12 = Pattern::parse("12");
  oracle::for_each_word(2, 8, [&](const oracle::Letters& v) {
    const Word x(std::vector<Letter>(v.begin(), v.end()));
    ASSERT_EQ(occurs(x, p12), has_match(x, p12)) << to_string(x);
  });
}

TEST(Match, MatchImpliesOccurrence) {
  const Pattern p = Pattern::parse("121");
  oracle::for_each_word(3, 6, [&](const oracle::Letters& v) {
    const Word x(std::vector<Letter>(v.begin(), v.end()));
    if (has_match(x, p)) {
      ASSERT_TRUE(occurs(x, p)) << to_string(x);
    }
  });
}

TEST(Match, ReverseAndComplementSymmetry) {
  for (const char* u : {"11", "12", "21", "111", "112"}) {
    const Pattern p = Pattern::parse(u);
    oracle::for_each_word(3, 6, [&](const oracle::Letters& v) {
      const Word x(std::vector<Letter>(v.begin(), v.end()));
      ASSERT_EQ(has_match(x, p), has_match(reverse(x), p.reversed()));
      ASSERT_EQ(has_match(x, p), has_match(complement_word(x), p.complemented()));
    });
  }
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(w("123")), w("321"));
  EXPECT_TRUE(reverse(Word{}).empty());
  EXPECT_EQ(reverse(w("5131135")), w("5311315"));
}

TEST(ComplementWord, Examples) {
  EXPECT_EQ(complement_word(w("12")), w("21"));
  EXPECT_EQ(complement_word(w("14213243")), w("41342312"));
  EXPECT_EQ(complement_word(w("11")), w("11"));
  EXPECT_THROW(complement_word(Word{}), precondition_error);
}

TEST(Pattern, Validation) {
  EXPECT_NO_THROW(Pattern::parse("12"));
  EXPECT_NO_THROW(Pattern::parse("1 2 1"));
  EXPECT_THROW(Pattern::parse("2"), parse_error);
  EXPECT_THROW(Pattern::parse("13"), parse_error);
  EXPECT_THROW(Pattern::parse(""), parse_error);
  EXPECT_THROW(Pattern(Word({2, 2})), precondition_error);
  EXPECT_EQ(Pattern::ones(3).to_string(), "111");
  EXPECT_EQ(Pattern::parse("12").reversed().to_string(), "21");
  EXPECT_EQ(Pattern::parse("112").complemented().to_string(), "221");
}

TEST(Word, RejectsZero) { EXPECT_THROW(Word(std::vector<Letter>{1, 0}), precondition_error); }

TEST(ParseWord, Forms) {
  EXPECT_EQ(parse_word("1 4 2 1"), Word({1, 4, 2, 1}));
  EXPECT_EQ(parse_word("10 12"), Word({10, 12}));
  EXPECT_EQ(parse_word("1421", true), Word({1, 4, 2, 1}));
  EXPECT_EQ(parse_word("1421 3", true), Word({1421, 3}));
  try {
    parse_word("1 x 2");
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.token(), "x");
  }
  EXPECT_THROW(parse_word("1 0"), parse_error);
  EXPECT_THROW(parse_word("-3"), parse_error);
}
