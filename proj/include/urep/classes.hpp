#pragma once

// Graph-class recognizers used to place 12-representable graphs among
// comparability, permutation, interval and co-interval graphs.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "urep/error.hpp"
#include "urep/graph.hpp"

namespace urep {

inline constexpr std::size_t kClassBound = 10;

using Arc = std::pair<Label, Label>;  // tail -> head

struct Orientation {
  bool transitive = false;
  std::vector<Arc> arcs;
};

namespace detail {

inline void require_class_bound(const LabeledGraph& g, const char* what) {
  if (g.size() > kClassBound)
    throw bound_error(std::string(what) + ": " + std::to_string(g.size()) + " vertices exceeds bound " +
                      std::to_string(kClassBound));
}

// dir[a*n+b] == 1 means a -> b is oriented.
class OrientationState {
 public:
  explicit OrientationState(const LabeledGraph& g) : g_(&g), n_(g.size()), dir_(n_ * n_, 0) {}

  bool oriented(std::size_t a, std::size_t b) const { return dir_[a * n_ + b] != 0; }

  // Orients a -> b and closes under the forcing rules. False on conflict.
  bool orient(std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, std::size_t>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      if (dir_[y * n_ + x]) return false;
      if (dir_[x * n_ + y]) continue;
      dir_[x * n_ + y] = 1;
      for (std::size_t c = 0; c < n_; ++c) {
        if (c == x || c == y) continue;
        const bool xc = g_->adjacent(x, c), yc = g_->adjacent(y, c);
        if (yc && !xc) queue.emplace_back(c, y);  // x->y->c would need xc
        if (xc && !yc) queue.emplace_back(x, c);  // c->x->y would need cy
        if (xc && yc) {
          if (dir_[y * n_ + c]) queue.emplace_back(x, c);
          if (dir_[c * n_ + x]) queue.emplace_back(c, y);
        }
      }
    }
    return true;
  }

  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (dir_[a * n_ + b]) out.emplace_back(g_->label(a), g_->label(b));
    return out;
  }

 private:
  const LabeledGraph* g_;
  std::size_t n_;
  std::vector<std::int8_t> dir_;
};

inline bool orient_rest(OrientationState& state, const LabeledGraph& g, Orientation& result) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!g.adjacent(i, j) || state.oriented(i, j) || state.oriented(j, i)) continue;
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        OrientationState trial = state;
        if (trial.orient(a, b) && orient_rest(trial, g, result)) return true;
      }
      return false;
    }
  result.transitive = true;
  result.arcs = state.arcs();
  return true;
}

}  // namespace detail

/// Searches for a transitive orientation (backtracking over edge orientations
/// with forcing propagation). On success `arcs` holds the witness.
inline Orientation is_comparability(const LabeledGraph& g) {
  detail::require_class_bound(g, "is_comparability");
  detail::OrientationState state(g);
  Orientation result;
  detail::orient_rest(state, g, result);
  return result;
}

/// Orients every edge from the smaller to the larger label.
inline Orientation orient_by_labels(const LabeledGraph& g) {
  Orientation result{true, g.edges()};
  for (std::size_t a = 0; a < g.size() && result.transitive; ++a)
    for (std::size_t b = a + 1; b < g.size() && result.transitive; ++b)
      for (std::size_t c = b + 1; c < g.size() && result.transitive; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c)) result.transitive = false;
  return result;
}

inline bool is_permutation_graph(const LabeledGraph& g) {
  return is_comparability(g).transitive && is_comparability(complement_graph(g)).transitive;
}

/// Repeatedly removes a simplicial vertex; chordal iff everything goes.
inline bool is_chordal(const LabeledGraph& g) {
  detail::require_class_bound(g, "is_chordal");
  const std::size_t n = g.size();
  std::vector<char> alive(n, 1);
  for (std::size_t removed = 0; removed < n; ++removed) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v) {
      if (!alive[v]) continue;
      std::vector<std::size_t> nb;
      for (std::size_t u : g.neighbors(v))
        if (alive[u]) nb.push_back(u);
      bool clique = true;
      for (std::size_t a = 0; a < nb.size() && clique; ++a)
        for (std::size_t b = a + 1; b < nb.size() && clique; ++b) clique = g.adjacent(nb[a], nb[b]);
      if (clique) pick = v;
    }
    if (pick == n) return false;
    alive[pick] = 0;
  }
  return true;
}

/// Interval = chordal and co-comparability.
inline bool is_interval(const LabeledGraph& g) {
  return is_chordal(g) && is_comparability(complement_graph(g)).transitive;
}

inline bool is_co_interval(const LabeledGraph& g) { return is_interval(complement_graph(g)); }

struct DoubleCaterpillar {
  bool is_double_caterpillar = false;
  std::vector<Label> spine;  // path order, starting from the smaller end label
};

/// Deletes all leaves twice; a double caterpillar leaves nothing or a path.
inline DoubleCaterpillar is_double_caterpillar(const LabeledGraph& t) {
  if (!is_tree(t)) throw precondition_error("is_double_caterpillar: input is not a tree");
  const std::size_t n = t.size();
  std::vector<char> alive(n, 1);
  auto live_degree = [&](std::size_t v) {
    std::size_t d = 0;
    for (std::size_t u : t.neighbors(v)) d += alive[u] ? 1 : 0;
    return d;
  };
  for (int round = 0; round < 2; ++round) {
    std::vector<std::size_t> drop;
    for (std::size_t v = 0; v < n; ++v)
      if (alive[v] && live_degree(v) <= 1) drop.push_back(v);
    for (std::size_t v : drop) alive[v] = 0;
  }
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) rest.push_back(v);
  DoubleCaterpillar out;
  if (rest.empty()) {
    out.is_double_caterpillar = true;
    return out;
  }
  std::size_t start = n;
  for (std::size_t v : rest) {
    const std::size_t d = live_degree(v);
    if (d > 2) return out;
    if (d <= 1 && start == n) start = v;
  }
  // The remainder of a tree is a subtree, so max degree 2 makes it a path.
  out.is_double_caterpillar = true;
  std::size_t prev = n, cur = start;
  while (cur != n) {
    out.spine.push_back(t.label(cur));
    std::size_t next = n;
    for (std::size_t u : t.neighbors(cur))
      if (alive[u] && u != prev) next = u;
    prev = cur;
    cur = next;
  }
  return out;
}

/// Clique plus isolated vertices.
inline bool is_11_occurrence_representable(const LabeledGraph& g) {
  std::vector<std::size_t> core;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.degree(v) > 0) core.push_back(v);
  for (std::size_t a = 0; a < core.size(); ++a)
    for (std::size_t b = a + 1; b < core.size(); ++b)
      if (!g.adjacent(core[a], core[b])) return false;
  return true;
}

}  // namespace urep
