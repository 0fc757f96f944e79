#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "urep/canonical.hpp"
#include "urep/classes.hpp"
#include "urep/construct.hpp"
#include "urep/generators.hpp"
#include "urep/graph_io.hpp"
#include "urep/obstruction.hpp"
#include "urep/recognize.hpp"

using namespace urep;

namespace {

LabeledGraph on(std::size_t n, std::vector<Edge> edges) { return LabeledGraph::on_range(n, edges); }
const Pattern p12 = Pattern::parse("12");

LabeledGraph from_mask(unsigned n, std::uint32_t mask) {
  LabeledGraph g = LabeledGraph::on_range(n);
  for (Label i = 1; i <= n; ++i)
    for (Label j = i + 1; j <= n; ++j)
      if (mask >> oracle::pair_bit(i, j, n) & 1u) g.add_edge(i, j);
  return g;
}

// Full binary tree of height 3 (heap numbering) with one pendant vertex under leaf 8.
LabeledGraph full_bin_plus_one() {
  std::vector<Edge> e;
  for (Label v = 2; v <= 15; ++v) e.push_back({v / 2, v});
  e.push_back({8, 16});
  return on(16, e);
}

}  // namespace

TEST(ObstructionLabeled, Examples) {
  auto i3 = find_obstruction_labeled(on(3, {{1, 2}, {2, 3}}));
  ASSERT_TRUE(i3);
  EXPECT_EQ(i3->kind, ObstructionKind::I3);
  EXPECT_EQ(i3->witness, (std::vector<Label>{1, 2, 3}));

  auto j4 = find_obstruction_labeled(on(4, {{1, 3}, {2, 4}}));
  ASSERT_TRUE(j4);
  EXPECT_EQ(j4->kind, ObstructionKind::J4);
  auto q4 = find_obstruction_labeled(on(4, {{1, 4}, {2, 3}}));
  ASSERT_TRUE(q4);
  EXPECT_EQ(q4->kind, ObstructionKind::Q4);

  auto bad = find_obstruction_labeled(on(4, {{2, 3}, {3, 4}, {4, 1}}));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->kind, ObstructionKind::BadPath);
  EXPECT_EQ(bad->witness, (std::vector<Label>{1, 4, 3, 2}));

  EXPECT_FALSE(find_obstruction_labeled(on(3, {{1, 3}, {2, 3}})));
  EXPECT_FALSE(find_obstruction_labeled(complete_graph(4)));
}

TEST(ObstructionLabeled, CutsetOrder) {
  // cut vertex 5 separates {1,3} and {2,4}; min is in {1,3} but 3 > 2
  const auto g = on(5, {{3, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
  auto ob = detail::find_cutset_violation(g);
  ASSERT_TRUE(ob);
  EXPECT_EQ(ob->kind, ObstructionKind::CutsetOrder);
  EXPECT_EQ(ob->anchor, (std::vector<Label>{5}));
  EXPECT_EQ(ob->split, 2u);
  EXPECT_TRUE(recheck(g, *ob));
}

TEST(ObstructionLabeled, WitnessesRecheck) {
  for (unsigned n = 3; n <= 5; ++n)
    for (std::uint32_t mask = 0; mask < (1u << oracle::pair_count(n)); ++mask) {
      const auto g = from_mask(n, mask);
      if (auto ob = find_obstruction_labeled(g)) {
        ASSERT_TRUE(recheck(g, *ob)) << to_edge_list(g);
      }
    }
  EXPECT_FALSE(recheck(on(3, {{1, 3}, {2, 3}}), Obstruction{ObstructionKind::I3, {1, 2, 3}, {}, 0}));
  EXPECT_FALSE(recheck(on(3, {{1, 2}, {2, 3}}), Obstruction{ObstructionKind::I3, {1, 2, 9}, {}, 0}));
}

TEST(ObstructionLabeled, SoundAgainstUnprunedSearch) {
  for (unsigned n = 1; n <= 4; ++n)
    for (std::uint32_t mask = 0; mask < (1u << oracle::pair_count(n)); ++mask) {
      const auto g = from_mask(n, mask);
      if (find_obstruction_labeled(g)) {
        EXPECT_EQ(search_word_12(g).status, Status::no) << to_edge_list(g);
      }
    }
  std::mt19937 rng(55);
  for (int t = 0; t < 300; ++t) {
    const auto g = from_mask(5, rng() & 1023u);
    if (find_obstruction_labeled(g)) {
      EXPECT_EQ(search_word_12(g).status, Status::no) << to_edge_list(g);
    }
  }
}

TEST(ObstructionTree, Examples) {
  auto ob = find_obstruction_tree(spider_graph({3, 3, 3}));
  ASSERT_TRUE(ob);
  EXPECT_EQ(ob->kind, ObstructionKind::GoodComponents);
  EXPECT_EQ(ob->anchor, (std::vector<Label>{1}));
  EXPECT_EQ(ob->witness.size(), 3u);
  EXPECT_TRUE(recheck(spider_graph({3, 3, 3}), *ob));

  EXPECT_FALSE(find_obstruction_tree(spider_graph({3, 3, 1, 1})));  // two not-good components at the center
  EXPECT_FALSE(find_obstruction_tree(path_graph(8)));
  EXPECT_FALSE(find_obstruction_tree(star_graph(5)));
  EXPECT_FALSE(find_obstruction_tree(full_bin_plus_one()));
  EXPECT_THROW(find_obstruction_tree(cycle_graph(4)), precondition_error);
}

TEST(ObstructionTree, CaterpillarsHaveNone) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& t : enumerate_trees(n))
      if (is_double_caterpillar(t).is_double_caterpillar) {
        EXPECT_FALSE(find_obstruction_tree(t)) << to_edge_list(t);
      }
}

TEST(Labeled, Examples) {
  auto yes = is_12_representable_labeled(on(3, {{1, 3}, {2, 3}}));
  EXPECT_EQ(yes.status, Status::yes);
  ASSERT_TRUE(yes.representation);
  EXPECT_TRUE(yes.representation->valid());

  auto no = is_12_representable_labeled(on(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(no.status, Status::no);
  ASSERT_TRUE(no.obstruction);
  EXPECT_EQ(no.obstruction->kind, ObstructionKind::I3);
  EXPECT_EQ(no.stats.nodes, 0u);

  auto k2 = is_12_representable_labeled(complete_graph(2));
  EXPECT_EQ(k2.representation->word, Word({2, 1}));

  EXPECT_THROW(is_12_representable_labeled(path_graph(8)), bound_error);
}

TEST(Labeled, BudgetGivesUnknown) {
  RecognizeOptions opt;
  opt.budget = 1;
  opt.screen = false;
  auto c = is_12_representable_labeled(on(5, {{1, 5}, {2, 5}, {3, 4}}), opt);
  EXPECT_EQ(c.status, Status::unknown);
  EXPECT_TRUE(c.budget_hit);
}

TEST(WordSearch, AgreesWithShortWordOracle) {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto reachable = oracle::representable_by_short_words(n, 7, {1, 2});
    for (std::uint32_t mask = 0; mask < (1u << oracle::pair_count(n)); ++mask) {
      const auto found = search_word_12(from_mask(n, mask));
      EXPECT_EQ(found.status == Status::yes, reachable.contains(mask));
      if (found.status == Status::yes) {
        EXPECT_TRUE(verifies(found.word, from_mask(n, mask), p12));
      }
    }
  }
}

TEST(Unlabeled, Cycles) {
  for (int n : {3, 4}) {
    auto c = is_12_representable(cycle_graph(n));
    EXPECT_EQ(c.status, Status::yes) << n;
    ASSERT_TRUE(c.representation);
    EXPECT_TRUE(c.representation->valid());
    EXPECT_EQ(relabel(cycle_graph(n), c.labeling), c.representation->graph);
  }
  for (int n : {5, 6, 7}) {
    auto c = is_12_representable(cycle_graph(n));
    EXPECT_EQ(c.status, Status::no) << n;
    EXPECT_EQ(c.stats.nodes, 0u);
    ASSERT_TRUE(c.obstruction);
    EXPECT_TRUE(recheck(relabel(cycle_graph(n), c.labeling), *c.obstruction));
  }
}

TEST(Unlabeled, SmallGraphsAreAllYes) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_graphs(n)) EXPECT_EQ(is_12_representable(g).status, Status::yes) << to_edge_list(g);
}

TEST(Unlabeled, GridInObstructionOnlyMode) {
  RecognizeOptions opt;
  opt.obstruction_only = true;
  EXPECT_EQ(is_12_representable(grid_graph(3, 3), opt).status, Status::no);
  EXPECT_EQ(is_12_representable(path_graph(9), opt).status, Status::unknown);
  EXPECT_THROW(is_12_representable(grid_graph(3, 3)), bound_error);
  EXPECT_THROW(is_12_representable(path_graph(13), opt), bound_error);
}

TEST(Unlabeled, SpiderRefutedByTreeObstruction) {
  RecognizeOptions opt;
  opt.obstruction_only = true;
  auto c = is_12_representable(spider_graph({3, 3, 3}), opt);
  EXPECT_EQ(c.status, Status::no);
  EXPECT_EQ(c.obstruction->kind, ObstructionKind::GoodComponents);
}

TEST(Unlabeled, JobsDoNotChangeCertificate) {
  const std::vector<LabeledGraph> gs{cycle_graph(4), spider_graph({2, 2, 2}), path_graph(7), complete_graph(5),
                                     cycle_graph(6), ladder_graph(3)};
  for (const auto& g : gs) {
    const auto one = is_12_representable(g);
    for (std::size_t jobs : {2u, 4u, 8u}) {
      RecognizeOptions opt;
      opt.jobs = jobs;
      const auto many = is_12_representable(g, opt);
      EXPECT_EQ(many.status, one.status);
      EXPECT_EQ(many.labeling, one.labeling);
      EXPECT_EQ(many.stats, one.stats);
      EXPECT_EQ(many.representation.has_value(), one.representation.has_value());
      if (one.representation) {
        EXPECT_EQ(many.representation->word, one.representation->word);
      }
    }
  }
}

TEST(Unlabeled, PermutationAndCoIntervalImplyYes) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : enumerate_graphs(n)) {
      const auto c = is_12_representable(g);
      if (is_permutation_graph(g) || is_co_interval(g)) {
        EXPECT_EQ(c.status, Status::yes) << to_edge_list(g);
      }
      if (c.status == Status::yes) {
        EXPECT_TRUE(is_comparability(g).transitive);
        EXPECT_TRUE(orient_by_labels(c.representation->graph).transitive);
      }
      const LabeledGraph& h = c.representation ? c.representation->graph : g;
      if (auto sigma = represent_permutation_graph(h)) {
        EXPECT_TRUE(verifies(*sigma, h, p12));
      }
    }
}

TEST(Unlabeled, TreesAgreeWithDoubleCaterpillar) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const auto& t : enumerate_trees(n))
      EXPECT_EQ(is_12_representable(t).status == Status::yes, is_double_caterpillar(t).is_double_caterpillar);
}

TEST(Classes, Examples) {
  EXPECT_FALSE(is_comparability(cycle_graph(5)).transitive);
  EXPECT_TRUE(is_comparability(grid_graph(3, 3)).transitive);
  EXPECT_TRUE(is_comparability(cycle_graph(6)).transitive);
  EXPECT_FALSE(is_permutation_graph(cycle_graph(5)));
  EXPECT_FALSE(is_permutation_graph(spider_graph({2, 2, 2})));
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  EXPECT_TRUE(is_chordal(spider_graph({3, 3, 3})));
  EXPECT_FALSE(is_co_interval(on(4, {{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_permutation_graph(on(4, {{1, 2}, {3, 4}})));
  EXPECT_FALSE(is_co_interval(spider_graph({2, 2, 2})));
  EXPECT_THROW(is_comparability(path_graph(11)), bound_error);
}

TEST(Classes, CaterpillarsArePermutationGraphs) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_trees(n)) {
      // caterpillar: removing leaves once leaves a path
      auto rest = t.labels();
      std::set<Label> keep(rest.begin(), rest.end());
      if (n > 2)
        for (Label l : leaves(t)) keep.erase(l);
      const auto spine = induced(t, keep);
      bool path = true;
      for (std::size_t v = 0; v < spine.size(); ++v) path = path && spine.degree(v) <= 2;
      if (path) {
        EXPECT_TRUE(is_permutation_graph(t)) << to_edge_list(t);
      }
    }
}

TEST(Classes, DoubleCaterpillar) {
  EXPECT_TRUE(is_double_caterpillar(star_graph(6)).is_double_caterpillar);
  EXPECT_FALSE(is_double_caterpillar(spider_graph({3, 3, 3})).is_double_caterpillar);
  const auto fb = is_double_caterpillar(full_bin_plus_one());
  EXPECT_TRUE(fb.is_double_caterpillar);
  EXPECT_EQ(fb.spine.size(), 4u);
  EXPECT_THROW(is_double_caterpillar(cycle_graph(3)), precondition_error);
}

TEST(Classes, ElevenOccurrence) {
  EXPECT_TRUE(is_11_occurrence_representable(on(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})));
  EXPECT_FALSE(is_11_occurrence_representable(path_graph(3)));
  EXPECT_TRUE(is_11_occurrence_representable(on(4, {})));
  for (unsigned n = 1; n <= 4; ++n) {
    const auto reachable = oracle::representable_by_two_words(n, {1, 1}, true);
    for (std::uint32_t mask = 0; mask < (1u << oracle::pair_count(n)); ++mask)
      EXPECT_EQ(is_11_occurrence_representable(from_mask(n, mask)), reachable.contains(mask));
  }
}
