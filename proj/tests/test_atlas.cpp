#include <gtest/gtest.h>

#include "urep/atlas.hpp"
#include "urep/generators.hpp"
#include "urep/serialize.hpp"

using namespace urep;

namespace {

const std::vector<AtlasRecord>& atlas5() {
  static const auto atlas = build_atlas(5, 4);
  return atlas;
}

}  // namespace

TEST(Classify, Cycles) {
  const auto c5 = classify(cycle_graph(5));
  EXPECT_EQ(c5.flags.repr12, Status::no);
  EXPECT_FALSE(c5.flags.comparability);
  EXPECT_FALSE(c5.flags.permutation);

  const auto c6 = classify(cycle_graph(6));
  EXPECT_EQ(c6.flags.repr12, Status::no);
  EXPECT_TRUE(c6.flags.comparability);
}

TEST(Classify, Triangle) {
  const auto f = classify(complete_graph(3)).flags;
  EXPECT_EQ(f.repr12, Status::yes);
  EXPECT_TRUE(f.comparability && f.permutation && f.interval && f.co_interval && f.chordal && f.occ11);
  EXPECT_FALSE(f.tree);
}

TEST(Classify, FourGraphs) {
  const auto a = classify(LabeledGraph::on_range(4, {{1, 2}, {3, 4}})).flags;
  EXPECT_TRUE(a.permutation);
  EXPECT_FALSE(a.co_interval);
  const auto b = classify(spider_graph({2, 2, 2})).flags;
  EXPECT_EQ(b.repr12, Status::yes);
  EXPECT_FALSE(b.permutation);
  EXPECT_FALSE(b.co_interval);
}

TEST(Classify, LargeGraphsStayUnknownOrNo) {
  const auto g = classify(grid_graph(3, 3));
  EXPECT_EQ(g.flags.repr12, Status::no);
  EXPECT_EQ(classify(path_graph(8)).flags.repr12, Status::unknown);
  EXPECT_THROW(classify(path_graph(11)), bound_error);
}

TEST(Atlas, CountsAndOrder) {
  const auto& atlas = atlas5();
  ASSERT_EQ(atlas.size(), 1u + 2 + 4 + 11 + 34);
  for (std::size_t i = 1; i < atlas.size(); ++i) {
    const auto& a = atlas[i - 1];
    const auto& b = atlas[i];
    EXPECT_TRUE(a.n < b.n || (a.n == b.n && a.code < b.code));
  }
}

TEST(Atlas, EveryRecordConsistent) {
  for (const auto& r : atlas5()) {
    const auto bad = check_record(r);
    EXPECT_TRUE(bad.empty()) << to_graph6(r.graph) << ": " << (bad.empty() ? "" : bad.front());
    EXPECT_EQ(classify(r.graph).flags, r.flags);
  }
}

TEST(Atlas, SmallGraphsAllRepresentable) {
  for (const auto& r : atlas5())
    if (r.n <= 4) EXPECT_EQ(r.flags.repr12, Status::yes);
}

TEST(Atlas, OnlyC5FailsAtFive) {
  std::size_t no = 0;
  for (const auto& r : atlas5())
    if (r.flags.repr12 == Status::no) {
      ++no;
      EXPECT_TRUE(are_isomorphic(r.graph, cycle_graph(5)));
      EXPECT_FALSE(r.flags.comparability);
    }
  EXPECT_EQ(no, 1u);
}

TEST(Atlas, CompleteGraphInPermutationAndCoInterval) {
  for (std::size_t n = 1; n <= 5; ++n) {
    bool found = false;
    for (const auto& r : atlas5())
      if (r.n == n && r.flags.permutation && r.flags.co_interval && r.graph == complete_graph(static_cast<int>(n)))
        found = true;
    EXPECT_TRUE(found) << n;
  }
}

TEST(Atlas, JsonlIndependentOfJobs) {
  const std::string one = atlas_jsonl(build_atlas(4, 1));
  EXPECT_EQ(atlas_jsonl(build_atlas(4, 3)), one);
  EXPECT_EQ(atlas_jsonl(build_atlas(4, 8)), one);
  EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), 1 + 2 + 4 + 11);
  const auto first = json::parse(one.substr(0, one.find('\n')));
  EXPECT_EQ(first.at("n"), 1);
  EXPECT_EQ(first.at("certificate").at("status"), "yes");
}

TEST(Atlas, RegionCounts) {
  const auto counts = region_counts(atlas5());
  std::size_t total = 0;
  for (const auto& [k, c] : counts) total += c;
  EXPECT_EQ(total, atlas5().size());
  const std::string csv = region_counts_csv(counts);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,repr12,comparability,permutation,co_interval,count");
  EXPECT_NE(csv.find("5,no,0,0,0,1\n"), std::string::npos);
}

TEST(Atlas, Bound) { EXPECT_THROW(build_atlas(9), bound_error); }
