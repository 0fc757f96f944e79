#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "urep/generators.hpp"
#include "urep/represent.hpp"

using namespace urep;

namespace {

Word w(std::string_view s) { return parse_word(s, true); }
LabeledGraph on(std::size_t n, std::vector<Edge> edges) { return LabeledGraph::on_range(n, edges); }

const Pattern p11 = Pattern::parse("11");
const Pattern p12 = Pattern::parse("12");

Word random_two_word(std::mt19937& rng, unsigned n) {
  std::vector<Letter> v;
  for (Letter c = 1; c <= n; ++c) {
    v.push_back(c);
    if (rng() & 1u) v.push_back(c);
  }
  std::shuffle(v.begin(), v.end(), rng);
  return Word(std::move(v));
}

Word random_word(std::mt19937& rng, unsigned n, std::size_t len) {
  std::vector<Letter> v;
  for (Letter c = 1; c <= n; ++c) v.push_back(c);
  while (v.size() < len) v.push_back(1 + rng() % n);
  std::shuffle(v.begin(), v.end(), rng);
  return Word(std::move(v));
}

}  // namespace

TEST(Decode, Examples) {
  EXPECT_EQ(decode(w("14213243"), p11), cycle_graph(4));
  EXPECT_EQ(decode(w("54321"), p12), complete_graph(5));
  EXPECT_EQ(decode(w("12345"), p12).edge_count(), 0u);
  EXPECT_EQ(decode(w("2 4 3 6 8 1 3 6 5 7"), p12),
            on(8, {{1, 2}, {1, 4}, {1, 8}, {3, 4}, {5, 6}, {5, 8}, {7, 8}}));
  EXPECT_THROW(decode(Word{}, p12), precondition_error);
}

TEST(Decode, AgreesWithOracle) {
  std::mt19937 rng(5);
  for (const char* u : {"11", "12", "21", "111", "121", "1122"}) {
    const Pattern p = Pattern::parse(u);
    const oracle::Letters ul(p.word().begin(), p.word().end());
    for (int t = 0; t < 200; ++t) {
      const unsigned n = 2 + rng() % 5;
      const Word x = random_word(rng, n, n + rng() % 8);
      const oracle::Letters xl(x.begin(), x.end());
      const std::uint32_t mask = oracle::decode_mask(xl, ul, n);
      const LabeledGraph g = decode(x, p);
      for (Label i = 1; i <= n; ++i)
        for (Label j = i + 1; j <= n; ++j)
          ASSERT_EQ(g.has_edge(i, j), bool(mask >> oracle::pair_bit(i, j, n) & 1u)) << to_string(x) << " " << u;
    }
  }
}

TEST(Verifies, Examples) {
  EXPECT_TRUE(verifies(w("14213243"), cycle_graph(4), p11));
  EXPECT_FALSE(verifies(w("12"), on(2, {{1, 2}}), p12));
  const Word seven = w("7 6 7 5 5 4 3 4 2 6 1 2 1 3");
  EXPECT_TRUE(verifies(seven, decode(seven, p12), p12));
  // labeled equality: an isomorphic relabeling does not verify
  EXPECT_FALSE(verifies(w("312"), on(3, {{1, 2}, {2, 3}}), p12));
  EXPECT_TRUE(verifies(w("312"), on(3, {{1, 3}, {2, 3}}), p12));
  // alphabet must equal the vertex set
  EXPECT_FALSE(verifies(w("21"), on(3, {{1, 2}}), p12));
}

TEST(Representation, CheckedRejectsWrongWord) {
  EXPECT_THROW(Representation::checked(on(2, {{1, 2}}), p12, w("12")), std::logic_error);
  EXPECT_TRUE(Representation::from_word(w("3 1 2"), p12).valid());
}

TEST(Normalize12, Examples) {
  EXPECT_EQ(normalize_12(w("11213")), w("1213"));
  EXPECT_EQ(normalize_12(w("7 6 7 5 5 4 3 4 2 6 1 2 1 3")), w("7 6 7 5 5 4 3 4 2 6 1 2 1 3"));
  EXPECT_EQ(normalize_12(w("2 1 2 1")), w("2 1 2 1"));
}

TEST(PadToExactlyTwo, Examples) {
  EXPECT_EQ(pad_to_exactly_two(w("12")), w("1122"));
  EXPECT_EQ(pad_to_exactly_two(w("2121")), w("2121"));
  EXPECT_THROW(pad_to_exactly_two(w("1112")), precondition_error);
}

TEST(Normalize12, PreservesDecodeOnRandomWords) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const unsigned n = 1 + rng() % 6;
    const Word x = random_word(rng, n, n + rng() % 10);
    const Word y = normalize_12(x);
    EXPECT_EQ(decode(y, p12), decode(x, p12)) << to_string(x);
    EXPECT_EQ(normalize_12(y), y);
    for (Letter c : alphabet(y)) EXPECT_LE(std::count(y.begin(), y.end(), c), 2);
  }
}

TEST(PadToExactlyTwo, PreservesDecodeOnRandomWords) {
  std::mt19937 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const Word x = random_two_word(rng, 1 + rng() % 6);
    EXPECT_EQ(decode(pad_to_exactly_two(x), p12), decode(x, p12)) << to_string(x);
  }
}

TEST(TransformReverseComplement, Examples) {
  EXPECT_EQ(transform_reverse_complement(w("12")), w("12"));
  EXPECT_EQ(transform_reverse_complement(w("21")), w("21"));
}

TEST(TransformReverseComplement, GivesSupplementOnSmallWords) {
  oracle::for_each_word(3, 6, [&](const oracle::Letters& v) {
    if (!oracle::uses_all(v, 3) && !oracle::uses_all(v, 2) && !oracle::uses_all(v, 1)) return;
    const Word x(std::vector<Letter>(v.begin(), v.end()));
    const LabeledGraph g = decode(x, p12);
    ASSERT_TRUE(verifies(transform_reverse_complement(x), supplement(g), p12)) << to_string(x);
  });
}

TEST(Symmetry, ReverseAndSupplementOnSmallWords) {
  for (const char* u : {"11", "12", "21", "111"}) {
    const Pattern p = Pattern::parse(u);
    oracle::for_each_word(3, 6, [&](const oracle::Letters& v) {
      const Word x(std::vector<Letter>(v.begin(), v.end()));
      const LabeledGraph g = decode(x, p);
      ASSERT_TRUE(verifies(reverse(x), g, p.reversed()));
      // complement relabels x -> max+1-x; on [n] that is the supplement
      const Letter top = *std::max_element(x.begin(), x.end());
      std::map<Label, Label> flip;
      for (Label l : g.labels()) flip[l] = top + 1 - l;
      ASSERT_TRUE(verifies(complement_word(x), relabel(g, flip), p.complemented()));
    });
  }
}

TEST(RestrictRepresentation, Examples) {
  const auto rep = Representation::from_word(w("14213243"), p11);
  const auto path = restrict_representation(rep, {1, 2, 3});
  EXPECT_TRUE(path.valid());
  EXPECT_EQ(path.graph.edge_count(), 2u);
  EXPECT_EQ(restrict_representation(rep, {1, 2, 3, 4}).word, rep.word);
  EXPECT_EQ(restrict_representation(rep, {4}).graph.size(), 1u);
  EXPECT_THROW(restrict_representation(rep, {5}), precondition_error);
}

TEST(RestrictRepresentation, Hereditary) {
  std::mt19937 rng(17);
  for (int t = 0; t < 300; ++t) {
    const unsigned n = 2 + rng() % 6;
    const auto rep = Representation::from_word(random_word(rng, n, n + rng() % 8), rng() & 1u ? p12 : p11);
    std::set<Label> keep;
    for (Label l = 1; l <= n; ++l)
      if (rng() % 3) keep.insert(l);
    if (keep.empty()) continue;
    EXPECT_TRUE(restrict_representation(rep, keep).valid());
  }
}

TEST(Permutations, DecodeIsPermutationGraph) {
  std::vector<Letter> sigma{1, 2, 3, 4, 5};
  do {
    const Word x(sigma);
    const LabeledGraph g = decode(x, p12);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = a + 1; b < 5; ++b) {
        const Letter i = std::min(sigma[a], sigma[b]), j = std::max(sigma[a], sigma[b]);
        const bool j_first = sigma[a] == j;
        EXPECT_EQ(g.has_edge(i, j), j_first);
      }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}
