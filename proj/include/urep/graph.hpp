#pragma once

// Labeled simple graphs.
//
// Vertices carry positive integer labels; internally everything is indexed by
// rank (position of the label in sorted order), and adjacency is a symmetric
// bit matrix over ranks. Rank order therefore coincides with label order,
// which is what every labeling-sensitive algorithm in this library relies on.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "urep/error.hpp"
#include "urep/words.hpp"

namespace urep {

using Edge = std::pair<Label, Label>;

class LabeledGraph {
 public:
  LabeledGraph() = default;

  explicit LabeledGraph(std::vector<Label> labels, const std::vector<Edge>& edges = {}) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
      throw precondition_error("duplicate vertex label");
    if (!labels.empty() && labels.front() == 0) throw precondition_error("labels must be positive");
    labels_ = std::move(labels);
    stride_ = (labels_.size() + 63) / 64;
    bits_.assign(labels_.size() * stride_, 0);
    for (auto [x, y] : edges) add_edge(x, y);
  }

  /// Graph on labels {1..n}.
  static LabeledGraph on_range(std::size_t n, const std::vector<Edge>& edges = {}) {
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);
    return LabeledGraph(std::move(labels), edges);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  Label label(std::size_t rank) const { return labels_[rank]; }

  std::optional<std::size_t> rank_of(Label x) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
    if (it == labels_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  bool contains(Label x) const { return rank_of(x).has_value(); }

  /// True when the labels are exactly {1..n}.
  bool on_range() const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] != i + 1) return false;
    return true;
  }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / 64] >> (j % 64)) & 1u;
  }
  bool has_edge(Label x, Label y) const {
    auto i = rank_of(x), j = rank_of(y);
    return i && j && adjacent(*i, *j);
  }

  void add_edge(Label x, Label y) {
    auto i = rank_of(x), j = rank_of(y);
    if (!i || !j) throw precondition_error("edge endpoint is not a vertex");
    if (*i == *j) throw precondition_error("loops are not allowed");
    set_adjacent(*i, *j, true);
  }
  void remove_edge(Label x, Label y) {
    auto i = rank_of(x), j = rank_of(y);
    if (i && j && *i != *j) set_adjacent(*i, *j, false);
  }
  void set_adjacent(std::size_t i, std::size_t j, bool on) {
    const std::uint64_t bi = std::uint64_t{1} << (j % 64), bj = std::uint64_t{1} << (i % 64);
    if (on) {
      bits_[i * stride_ + j / 64] |= bi;
      bits_[j * stride_ + i / 64] |= bj;
    } else {
      bits_[i * stride_ + j / 64] &= ~bi;
      bits_[j * stride_ + i / 64] &= ~bj;
    }
  }

  std::size_t degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t k = 0; k < stride_; ++k) d += static_cast<std::size_t>(__builtin_popcountll(bits_[i * stride_ + k]));
    return d;
  }

  std::vector<std::size_t> neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (adjacent(i, j)) out.push_back(j);
    return out;
  }

  /// Neighborhood as a bit mask; only meaningful for graphs with <= 64 vertices.
  std::uint64_t row_mask(std::size_t i) const { return stride_ ? bits_[i * stride_] : 0; }

  std::size_t edge_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < size(); ++i) total += degree(i);
    return total / 2;
  }

  /// Edges as (smaller label, larger label), sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (adjacent(i, j)) out.emplace_back(labels_[i], labels_[j]);
    return out;
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.labels_ == b.labels_ && a.bits_ == b.bits_;
  }

 private:
  std::vector<Label> labels_;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// Transformations

inline LabeledGraph induced(const LabeledGraph& g, const std::set<Label>& keep) {
  std::vector<std::size_t> ranks;
  for (Label x : keep) {
    auto r = g.rank_of(x);
    if (!r) throw precondition_error("induced: label " + std::to_string(x) + " is not a vertex");
    ranks.push_back(*r);
  }
  LabeledGraph out(std::vector<Label>(keep.begin(), keep.end()));
  for (std::size_t a = 0; a < ranks.size(); ++a)
    for (std::size_t b = a + 1; b < ranks.size(); ++b)
      if (g.adjacent(ranks[a], ranks[b])) out.set_adjacent(a, b, true);
  return out;
}

/// Applies `relabel` to every vertex. The map must be injective on the labels.
inline LabeledGraph relabel(const LabeledGraph& g, const std::map<Label, Label>& relabel) {
  std::vector<Label> labels;
  for (Label x : g.labels()) {
    auto it = relabel.find(x);
    if (it == relabel.end()) throw precondition_error("relabel: missing image for " + std::to_string(x));
    labels.push_back(it->second);
  }
  std::vector<Edge> edges;
  for (auto [x, y] : g.edges()) edges.emplace_back(relabel.at(x), relabel.at(y));
  return LabeledGraph(std::move(labels), edges);
}

/// Relabels the i-th smallest vertex as i.
inline LabeledGraph reduce_graph(const LabeledGraph& g) {
  LabeledGraph out = LabeledGraph::on_range(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j)) out.set_adjacent(i, j, true);
  return out;
}

/// Relabels x as n+1-x. Requires labels {1..n}.
inline LabeledGraph supplement(const LabeledGraph& g) {
  if (!g.on_range()) throw precondition_error("supplement requires labels {1..n}");
  const std::size_t n = g.size();
  LabeledGraph out = LabeledGraph::on_range(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) out.set_adjacent(n - 1 - i, n - 1 - j, true);
  return out;
}

inline LabeledGraph complement_graph(const LabeledGraph& g) {
  LabeledGraph out(g.labels());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!g.adjacent(i, j)) out.set_adjacent(i, j, true);
  return out;
}

/// Adds `copy` adjacent to exactly the neighbors of `v` (and not to `v`).
inline LabeledGraph add_copy(const LabeledGraph& g, Label v, Label copy) {
  auto rv = g.rank_of(v);
  if (!rv) throw precondition_error("add_copy: " + std::to_string(v) + " is not a vertex");
  if (g.contains(copy)) throw precondition_error("add_copy: label " + std::to_string(copy) + " already used");
  std::vector<Label> labels = g.labels();
  labels.push_back(copy);
  std::vector<Edge> edges = g.edges();
  for (std::size_t j : g.neighbors(*rv)) edges.emplace_back(copy, g.label(j));
  return LabeledGraph(std::move(labels), edges);
}

// ---------------------------------------------------------------------------
// Structure queries

/// Components as sorted label lists, ordered by smallest label.
inline std::vector<std::vector<Label>> connected_components(const LabeledGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<Label>> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    std::vector<Label> members;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      members.push_back(g.label(v));
      for (std::size_t u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const LabeledGraph& g) { return connected_components(g).size() <= 1; }

inline bool is_tree(const LabeledGraph& g) {
  return g.size() >= 1 && g.edge_count() + 1 == g.size() && is_connected(g);
}

/// Degree-one vertices.
inline std::vector<Label> leaves(const LabeledGraph& g) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.degree(i) == 1) out.push_back(g.label(i));
  return out;
}

/// All induced paths with 1..max_len edges, each listed once with its first
/// label smaller than its last.
inline std::vector<std::vector<Label>> induced_paths(const LabeledGraph& g, std::size_t max_len) {
  std::vector<std::vector<Label>> out;
  std::vector<std::size_t> path;
  std::vector<char> on_path(g.size(), 0);
  auto extend = [&](auto&& self) -> void {
    const std::size_t last = path.back();
    if (path.size() >= 2 && path.front() < last) {
      std::vector<Label> labels;
      for (std::size_t v : path) labels.push_back(g.label(v));
      out.push_back(std::move(labels));
    }
    if (path.size() > max_len) return;
    for (std::size_t next : g.neighbors(last)) {
      if (on_path[next]) continue;
      bool chordless = true;
      for (std::size_t k = 0; k + 1 < path.size() && chordless; ++k) chordless = !g.adjacent(path[k], next);
      if (!chordless) continue;
      path.push_back(next);
      on_path[next] = 1;
      self(self);
      on_path[next] = 0;
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < g.size(); ++s) {
    path = {s};
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
  }
  return out;
}

/// Vertex sets U with 1 <= |U| <= max_size whose removal disconnects g.
inline std::vector<std::vector<Label>> cutsets(const LabeledGraph& g, std::size_t max_size) {
  std::vector<std::vector<Label>> out;
  std::vector<Label> chosen;
  std::set<Label> all(g.labels().begin(), g.labels().end());
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!chosen.empty()) {
      std::set<Label> rest = all;
      for (Label x : chosen) rest.erase(x);
      if (connected_components(induced(g, rest)).size() >= 2) out.push_back(chosen);
    }
    if (chosen.size() == max_size) return;
    for (std::size_t i = from; i < g.size(); ++i) {
      chosen.push_back(g.label(i));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace urep
