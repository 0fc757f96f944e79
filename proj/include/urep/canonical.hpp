#pragma once

// Canonical forms, exhaustive enumeration of small graphs and trees, and an
// isomorphism finder for moderately sized sparse graphs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "urep/error.hpp"
#include "urep/graph.hpp"

namespace urep {

inline constexpr std::size_t kCanonicalBound = 8;
inline constexpr std::size_t kTreeEnumerationBound = 10;

/// Upper-triangle adjacency bits read column by column ((0,1), (0,2), (1,2),
/// (0,3), ...), first bit most significant. Fixed length n(n-1)/2.
struct CanonicalCode {
  std::size_t n = 0;
  std::uint64_t bits = 0;

  std::size_t length() const { return n * (n - 1) / 2; }
  std::string to_string() const {
    std::string s;
    for (std::size_t i = length(); i-- > 0;) s.push_back(((bits >> i) & 1u) ? '1' : '0');
    return s;
  }
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalLabeling {
  CanonicalCode code;
  std::vector<std::size_t> order;  // order[p] = rank of the vertex placed at position p
};

/// Minimal adjacency code over all n! vertex orders, by branch and bound on
/// code prefixes. Exact; no refinement heuristics.
inline CanonicalLabeling canonical_labeling(const LabeledGraph& g) {
  const std::size_t n = g.size();
  if (n > kCanonicalBound)
    throw bound_error("canonical_form: " + std::to_string(n) + " vertices exceeds canonicalization bound " +
                      std::to_string(kCanonicalBound));
  const std::size_t total_bits = n * (n - 1) / 2;
  CanonicalLabeling best{{n, 0}, {}};
  bool have_best = false;
  std::vector<std::size_t> order;
  std::uint32_t used = 0;

  auto dfs = [&](auto&& self, std::size_t pos, std::uint64_t prefix) -> void {
    if (pos == n) {
      if (!have_best || prefix < best.code.bits) {
        best.code.bits = prefix;
        best.order = order;
        have_best = true;
      }
      return;
    }
    const std::size_t bits_through = pos * (pos + 1) / 2;
    for (std::size_t v = 0; v < n; ++v) {
      if (used & (1u << v)) continue;
      std::uint64_t next = prefix;
      for (std::size_t i = 0; i < pos; ++i) next = (next << 1) | (g.adjacent(order[i], v) ? 1u : 0u);
      if (have_best && next > (best.code.bits >> (total_bits - bits_through))) continue;
      order.push_back(v);
      used |= 1u << v;
      self(self, pos + 1, next);
      used &= ~(1u << v);
      order.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  if (n == 0) best.order.clear();
  return best;
}

inline CanonicalCode canonical_form(const LabeledGraph& g) { return canonical_labeling(g).code; }

/// The graph on {1..n} whose adjacency code is `code`.
inline LabeledGraph graph_from_code(const CanonicalCode& code) {
  LabeledGraph g = LabeledGraph::on_range(code.n);
  std::size_t bit = code.length();
  for (std::size_t j = 1; j < code.n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((code.bits >> --bit) & 1u) g.set_adjacent(i, j, true);
  return g;
}

/// Canonical representative: labels {1..n} in canonical order.
inline LabeledGraph canonical_graph(const LabeledGraph& g) { return graph_from_code(canonical_form(g)); }

/// One graph per isomorphism class on n vertices, ordered by canonical code.
/// Each graph is the canonical representative.
inline std::vector<LabeledGraph> enumerate_graphs(std::size_t n) {
  if (n > kCanonicalBound)
    throw bound_error("enumerate_graphs: n = " + std::to_string(n) + " exceeds bound " +
                      std::to_string(kCanonicalBound));
  std::vector<LabeledGraph> level{LabeledGraph::on_range(n == 0 ? 0 : 1)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<CanonicalCode, LabeledGraph> next;
    for (const auto& parent : level) {
      for (std::uint32_t nbrs = 0; nbrs < (1u << (m - 1)); ++nbrs) {
        LabeledGraph child = LabeledGraph::on_range(m);
        for (auto [x, y] : parent.edges()) child.add_edge(x, y);
        for (std::size_t i = 0; i + 1 < m; ++i)
          if (nbrs & (1u << i)) child.set_adjacent(i, m - 1, true);
        auto code = canonical_form(child);
        if (!next.contains(code)) next.emplace(code, graph_from_code(code));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

// ---------------------------------------------------------------------------
// Trees: AHU encoding rooted at a center.

namespace detail {

inline std::string rooted_code(const LabeledGraph& t, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (std::size_t u : t.neighbors(v))
    if (u != parent) kids.push_back(rooted_code(t, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

inline std::vector<std::size_t> tree_centers(const LabeledGraph& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer)
      for (std::size_t u : t.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace detail

/// Isomorphism-invariant string code of a tree.
inline std::string tree_code(const LabeledGraph& t) {
  if (!is_tree(t)) throw precondition_error("tree_code: input is not a tree");
  std::string best;
  for (std::size_t c : detail::tree_centers(t)) {
    auto code = detail::rooted_code(t, c, t.size());
    if (best.empty() || code < best) best = code;
  }
  return best;
}

/// Rebuilds a tree on {1..n} from its code, labeling in breadth-first order.
inline LabeledGraph tree_from_code(const std::string& code) {
  // Parse nested parentheses into parent pointers (preorder), then relabel BFS.
  std::vector<std::size_t> parent;
  std::vector<std::size_t> stack;
  for (char c : code) {
    if (c == '(') {
      parent.push_back(stack.empty() ? SIZE_MAX : stack.back());
      stack.push_back(parent.size() - 1);
    } else {
      stack.pop_back();
    }
  }
  const std::size_t n = parent.size();
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t v = 1; v < n; ++v) kids[parent[v]].push_back(v);
  std::vector<std::size_t> bfs{0};
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t k : kids[bfs[i]]) bfs.push_back(k);
  std::vector<Label> label(n);
  for (std::size_t i = 0; i < n; ++i) label[bfs[i]] = static_cast<Label>(i + 1);
  LabeledGraph t = LabeledGraph::on_range(n);
  for (std::size_t v = 1; v < n; ++v) t.add_edge(label[v], label[parent[v]]);
  return t;
}

/// One tree per isomorphism class on n vertices, ordered by tree code.
inline std::vector<LabeledGraph> enumerate_trees(std::size_t n) {
  if (n == 0 || n > kTreeEnumerationBound)
    throw bound_error("enumerate_trees: n = " + std::to_string(n) + " outside 1.." +
                      std::to_string(kTreeEnumerationBound));
  std::map<std::string, LabeledGraph> level{{"()", LabeledGraph::on_range(1)}};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<std::string, LabeledGraph> next;
    for (const auto& [code, parent] : level) {
      for (std::size_t v = 0; v + 1 < m; ++v) {
        std::vector<Edge> edges = parent.edges();
        edges.emplace_back(parent.label(v), static_cast<Label>(m));
        LabeledGraph child = LabeledGraph::on_range(m, edges);
        auto c = tree_code(child);
        if (!next.contains(c)) next.emplace(c, tree_from_code(c));
      }
    }
    level = std::move(next);
  }
  std::vector<LabeledGraph> out;
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search

/// Finds a label map f: V(a) -> V(b) with xy in E(a) iff f(x)f(y) in E(b).
/// Backtracking in breadth-first order, candidates filtered by degree and by
/// adjacency to already-mapped vertices.
inline std::optional<std::map<Label, Label>> find_isomorphism(const LabeledGraph& a, const LabeledGraph& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::size_t> deg_a(n), deg_b(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Vertex order: BFS per component, each component started at a max-degree vertex.
  std::vector<std::size_t> order;
  std::vector<char> seen(n, 0);
  while (order.size() < n) {
    std::size_t start = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v] && (start == n || deg_a[v] > deg_a[start])) start = v;
    seen[start] = 1;
    std::size_t head = order.size();
    order.push_back(start);
    while (head < order.size()) {
      for (std::size_t u : a.neighbors(order[head]))
        if (!seen[u]) {
          seen[u] = 1;
          order.push_back(u);
        }
      ++head;
    }
  }
  std::vector<std::size_t> image(n, n), pos_in_order(n);
  for (std::size_t i = 0; i < n; ++i) pos_in_order[order[i]] = i;
  std::vector<char> taken(n, 0);

  auto dfs = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    const std::size_t v = order[i];
    std::size_t anchor = n;
    for (std::size_t u : a.neighbors(v))
      if (pos_in_order[u] < i) {
        anchor = u;
        break;
      }
    std::vector<std::size_t> candidates;
    if (anchor == n) {
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), std::size_t{0});
    } else {
      candidates = b.neighbors(image[anchor]);
    }
    for (std::size_t w : candidates) {
      if (taken[w] || deg_b[w] != deg_a[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = a.adjacent(order[k], v) == b.adjacent(image[order[k]], w);
      if (!ok) continue;
      image[v] = w;
      taken[w] = 1;
      if (self(self, i + 1)) return true;
      taken[w] = 0;
      image[v] = n;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  std::map<Label, Label> out;
  for (std::size_t v = 0; v < n; ++v) out[a.label(v)] = b.label(image[v]);
  return out;
}

inline bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace urep
