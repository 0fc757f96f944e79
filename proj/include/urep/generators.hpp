#pragma once

// Generators for the graph families used throughout the library.
//
// Grid-derived families (grid, ladder, corner, skew_ladder) are built from
// point sets in Z^2 and labeled row-major (by y, then x). Parameter ranges:
//
//   cycle(n)                        n >= 3
//   path(n), complete(n)            n >= 1
//   star(n)                         n >= 0 leaves, center labeled 1
//   grid(rows, cols)                rows, cols >= 1
//   ladder(k)                       k >= 1 rungs (P_2 x P_k)
//   corner(k)                       k >= 1; L-shaped width-2 strip, both arms
//                                   have 2k+1 rungs and share a 2x2 block
//   skew_ladder(k)                  k >= 1; two width-2 strips of 2k+1 rungs,
//                                   offset by one column, overlapping in two rungs
//   uniform_double_caterpillar(r,k) r, k >= 1; spine of 2r vertices, each with
//                                   one leaf and k two-vertex pendant paths
//   spider(a, b, ...)               legs >= 1 each, center labeled 1

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "urep/error.hpp"
#include "urep/graph.hpp"

namespace urep {

enum class Family {
  cycle,
  path,
  complete,
  star,
  grid,
  ladder,
  corner,
  skew_ladder,
  uniform_double_caterpillar,
  spider,
};

struct GraphFamilySpec {
  Family family;
  std::vector<int> params;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::grid: return "grid";
    case Family::ladder: return "ladder";
    case Family::corner: return "corner";
    case Family::skew_ladder: return "skew_ladder";
    case Family::uniform_double_caterpillar: return "uniform_double_caterpillar";
    case Family::spider: return "spider";
  }
  return "?";
}

inline Family family_from_name(std::string_view name) {
  for (Family f : {Family::cycle, Family::path, Family::complete, Family::star, Family::grid, Family::ladder,
                   Family::corner, Family::skew_ladder, Family::uniform_double_caterpillar, Family::spider})
    if (family_name(f) == name) return f;
  if (name == "dc" || name == "double_caterpillar") return Family::uniform_double_caterpillar;
  if (name == "skewladder") return Family::skew_ladder;
  throw parse_error("unknown graph family", std::string(name));
}

namespace detail {

using Point = std::pair<int, int>;  // (x, y)

inline LabeledGraph grid_graph(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LabeledGraph g = LabeledGraph::on_range(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (std::abs(points[i].first - points[j].first) + std::abs(points[i].second - points[j].second) == 1)
        g.set_adjacent(i, j, true);
  return g;
}

inline void require(bool ok, std::string_view family, std::string_view what) {
  if (!ok) throw precondition_error(std::string(family) + ": " + std::string(what));
}

}  // namespace detail

inline LabeledGraph path_graph(int n) {
  detail::require(n >= 1, "path", "needs n >= 1");
  LabeledGraph g = LabeledGraph::on_range(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline LabeledGraph cycle_graph(int n) {
  detail::require(n >= 3, "cycle", "needs n >= 3");
  LabeledGraph g = path_graph(n);
  g.add_edge(1, static_cast<Label>(n));
  return g;
}

inline LabeledGraph complete_graph(int n) {
  detail::require(n >= 1, "complete", "needs n >= 1");
  LabeledGraph g = LabeledGraph::on_range(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

inline LabeledGraph star_graph(int leaves) {
  detail::require(leaves >= 0, "star", "needs a nonnegative number of leaves");
  LabeledGraph g = LabeledGraph::on_range(static_cast<std::size_t>(leaves) + 1);
  for (int i = 2; i <= leaves + 1; ++i) g.add_edge(1, i);
  return g;
}

inline LabeledGraph grid_graph(int rows, int cols) {
  detail::require(rows >= 1 && cols >= 1, "grid", "needs rows, cols >= 1");
  std::vector<detail::Point> pts;
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < cols; ++x) pts.emplace_back(x, y);
  return detail::grid_graph(std::move(pts));
}

inline LabeledGraph ladder_graph(int k) {
  detail::require(k >= 1, "ladder", "needs k >= 1");
  return grid_graph(k, 2);
}

inline LabeledGraph corner_graph(int k) {
  detail::require(k >= 1, "corner", "needs k >= 1");
  std::vector<detail::Point> pts;
  for (int y = 0; y <= 2 * k; ++y)
    for (int x : {0, 1}) pts.emplace_back(x, y);
  for (int y : {2 * k - 1, 2 * k})
    for (int x = 0; x <= 2 * k; ++x) pts.emplace_back(x, y);
  return detail::grid_graph(std::move(pts));
}

inline LabeledGraph skew_ladder_graph(int k) {
  detail::require(k >= 1, "skew_ladder", "needs k >= 1");
  std::vector<detail::Point> pts;
  for (int y = 0; y <= 2 * k; ++y)
    for (int x : {1, 2}) pts.emplace_back(x, y);
  for (int y = 2 * k - 1; y <= 4 * k - 1; ++y)
    for (int x : {0, 1}) pts.emplace_back(x, y);
  return detail::grid_graph(std::move(pts));
}

inline LabeledGraph uniform_double_caterpillar(int spine_pairs, int k) {
  detail::require(spine_pairs >= 1 && k >= 1, "uniform_double_caterpillar", "needs r, k >= 1");
  const int spine = 2 * spine_pairs;
  const int per_spine_vertex = 2 * k + 2;
  LabeledGraph g = LabeledGraph::on_range(static_cast<std::size_t>(spine * per_spine_vertex));
  Label next = 1;
  Label previous_spine = 0;
  for (int i = 0; i < spine; ++i) {
    const Label s = next++;
    if (previous_spine) g.add_edge(previous_spine, s);
    previous_spine = s;
    g.add_edge(s, next++);  // leaf child
    for (int m = 0; m < k; ++m) {
      const Label middle = next++;
      g.add_edge(s, middle);
      g.add_edge(middle, next++);
    }
  }
  return g;
}

inline LabeledGraph spider_graph(const std::vector<int>& legs) {
  detail::require(!legs.empty(), "spider", "needs at least one leg");
  int total = 1;
  for (int len : legs) {
    detail::require(len >= 1, "spider", "legs must have length >= 1");
    total += len;
  }
  LabeledGraph g = LabeledGraph::on_range(static_cast<std::size_t>(total));
  Label next = 2;
  for (int len : legs) {
    Label prev = 1;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

inline LabeledGraph generate(const GraphFamilySpec& spec) {
  const auto& p = spec.params;
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw precondition_error(std::string(family_name(spec.family)) + ": expected " + std::to_string(count) +
                               " parameter(s), got " + std::to_string(p.size()));
  };
  switch (spec.family) {
    case Family::cycle: need(1); return cycle_graph(p[0]);
    case Family::path: need(1); return path_graph(p[0]);
    case Family::complete: need(1); return complete_graph(p[0]);
    case Family::star: need(1); return star_graph(p[0]);
    case Family::grid: need(2); return grid_graph(p[0], p[1]);
    case Family::ladder: need(1); return ladder_graph(p[0]);
    case Family::corner: need(1); return corner_graph(p[0]);
    case Family::skew_ladder: need(1); return skew_ladder_graph(p[0]);
    case Family::uniform_double_caterpillar: need(2); return uniform_double_caterpillar(p[0], p[1]);
    case Family::spider: return spider_graph(p);
  }
  throw precondition_error("unknown family");
}

}  // namespace urep
