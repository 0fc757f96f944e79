#pragma once

// Obstructions to 12-representability.
//
// Labeled obstructions refute one particular labeling:
//   I3           induced path i-j-k with i < j < k        (reduces to ([3],{12,23}))
//   J4, Q4       induced 2K2 pairing the two smallest with the two largest
//                labels: ([4],{13,24}) and ([4],{14,23})
//   BadPath      induced path with >= 3 edges whose endpoints carry the two
//                smallest labels on the path
//   CutsetOrder  cutset U (|U| <= 2) and two components V1, V2 of G - U with
//                >= 2 vertices each, min(V1 u V2) in V1, but not V1 < V2
// The unlabeled tree obstruction refutes every labeling at once:
//   GoodComponents  vertex v such that >= 3 components of T - v are not stars
//                   centered at the neighbor of v
//
// Every witness can be re-validated against its graph with `recheck`.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "urep/error.hpp"
#include "urep/graph.hpp"

namespace urep {

enum class ObstructionKind { I3, J4, Q4, BadPath, CutsetOrder, GoodComponents };

inline std::string_view kind_name(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::I3: return "I3";
    case ObstructionKind::J4: return "J4";
    case ObstructionKind::Q4: return "Q4";
    case ObstructionKind::BadPath: return "BadPath";
    case ObstructionKind::CutsetOrder: return "CutsetOrder";
    case ObstructionKind::GoodComponents: return "GoodComponents";
  }
  return "?";
}

inline ObstructionKind kind_from_name(std::string_view s) {
  for (auto k : {ObstructionKind::I3, ObstructionKind::J4, ObstructionKind::Q4, ObstructionKind::BadPath,
                 ObstructionKind::CutsetOrder, ObstructionKind::GoodComponents})
    if (kind_name(k) == s) return k;
  throw parse_error("unknown obstruction kind", std::string(s));
}

struct Obstruction {
  ObstructionKind kind;
  // I3/J4/Q4: the vertices in increasing label order. BadPath: the path in
  // order, smaller endpoint first. CutsetOrder: V1 then V2 (see `split`).
  // GoodComponents: the neighbors of the center heading not-good components.
  std::vector<Label> witness;
  // CutsetOrder: the cutset. GoodComponents: the center vertex.
  std::vector<Label> anchor;
  std::size_t split = 0;  // CutsetOrder: |V1|

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

inline constexpr std::size_t kCutsetScreenSize = 2;

namespace detail {

// Reduced shapes over ranks a < b < c (< d).
inline bool is_i3(const LabeledGraph& g, std::size_t a, std::size_t b, std::size_t c) {
  return g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c);
}
inline bool is_2k2(const LabeledGraph& g, std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  // exactly the edges pq and rs among {p,q,r,s}
  return g.adjacent(p, q) && g.adjacent(r, s) && !g.adjacent(p, r) && !g.adjacent(p, s) && !g.adjacent(q, r) &&
         !g.adjacent(q, s);
}
inline bool is_j4(const LabeledGraph& g, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return is_2k2(g, a, c, b, d);
}
inline bool is_q4(const LabeledGraph& g, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  return is_2k2(g, a, d, b, c);
}

inline std::optional<Obstruction> find_bad_path(const LabeledGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> path;
  std::vector<char> on_path(n, 0);
  std::optional<Obstruction> found;
  // Interior vertices must exceed the start; an endpoint must be below every
  // interior vertex and above the start.
  auto dfs = [&](auto&& self, std::size_t min_interior) -> bool {
    const std::size_t last = path.back();
    for (std::size_t u : g.neighbors(last)) {
      if (on_path[u] || u <= path.front()) continue;
      bool chordless = true;
      for (std::size_t k = 0; k + 1 < path.size() && chordless; ++k) chordless = !g.adjacent(path[k], u);
      if (!chordless) continue;
      if (path.size() >= 3 && u < min_interior) {
        path.push_back(u);
        Obstruction ob{ObstructionKind::BadPath, {}, {}, 0};
        for (std::size_t v : path) ob.witness.push_back(g.label(v));
        found = std::move(ob);
        return true;
      }
      path.push_back(u);
      on_path[u] = 1;
      const std::size_t next_min = path.size() >= 2 ? std::min(min_interior, u) : min_interior;
      if (self(self, next_min)) return true;
      on_path[u] = 0;
      path.pop_back();
    }
    return false;
  };
  for (std::size_t s = 0; s < n && !found; ++s) {
    path = {s};
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    dfs(dfs, n);
  }
  return found;
}

inline std::vector<std::vector<std::size_t>> components_without(const LabeledGraph& g, const std::vector<std::size_t>& removed) {
  const std::size_t n = g.size();
  std::vector<int> comp(n, -1);
  for (std::size_t r : removed) comp[r] = -2;
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t u : g.neighbors(v))
        if (comp[u] == -1) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// Given components A, B (sorted ranks) with min(A u B) in A, is A < B violated?
inline bool order_violated(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return a.back() > b.front();
}

inline std::optional<Obstruction> find_cutset_violation(const LabeledGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> cut;
  std::optional<Obstruction> found;
  auto check = [&]() {
    auto comps = components_without(g, cut);
    if (comps.size() < 2) return false;
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        auto a = comps[i], b = comps[j];
        if (a.size() < 2 || b.size() < 2) continue;
        if (b.front() < a.front()) std::swap(a, b);
        if (!order_violated(a, b)) continue;
        Obstruction ob{ObstructionKind::CutsetOrder, {}, {}, a.size()};
        for (std::size_t v : a) ob.witness.push_back(g.label(v));
        for (std::size_t v : b) ob.witness.push_back(g.label(v));
        for (std::size_t v : cut) ob.anchor.push_back(g.label(v));
        found = std::move(ob);
        return true;
      }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (!cut.empty() && check()) return true;
    if (cut.size() == kCutsetScreenSize) return false;
    for (std::size_t v = from; v < n; ++v) {
      cut.push_back(v);
      if (self(self, v + 1)) return true;
      cut.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace detail

/// First obstruction in scan order: bad paths, then I3, J4, Q4 subsets in
/// lexicographic order, then cutsets of size <= 2.
inline std::optional<Obstruction> find_obstruction_labeled(const LabeledGraph& g) {
  if (auto bad = detail::find_bad_path(g)) return bad;
  const std::size_t n = g.size();
  auto labels_of = [&](std::initializer_list<std::size_t> ranks) {
    std::vector<Label> out;
    for (std::size_t r : ranks) out.push_back(g.label(r));
    return out;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (detail::is_i3(g, a, b, c)) return Obstruction{ObstructionKind::I3, labels_of({a, b, c}), {}, 0};
  for (auto kind : {ObstructionKind::J4, ObstructionKind::Q4})
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d) {
            const bool hit = kind == ObstructionKind::J4 ? detail::is_j4(g, a, b, c, d) : detail::is_q4(g, a, b, c, d);
            if (hit) return Obstruction{kind, labels_of({a, b, c, d}), {}, 0};
          }
  return detail::find_cutset_violation(g);
}

/// A vertex of the tree with at least three components of T - v that are not
/// stars centered at the neighbor of v.
inline std::optional<Obstruction> find_obstruction_tree(const LabeledGraph& t) {
  if (!is_tree(t)) throw precondition_error("find_obstruction_tree: input is not a tree");
  for (std::size_t v = 0; v < t.size(); ++v) {
    std::vector<Label> bad_heads;
    for (std::size_t head : t.neighbors(v)) {
      // Walk the component of T - v containing `head`.
      std::vector<std::size_t> stack{head};
      std::vector<char> seen(t.size(), 0);
      seen[v] = seen[head] = 1;
      bool good = true;
      while (!stack.empty() && good) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : t.neighbors(x)) {
          if (seen[y]) continue;
          seen[y] = 1;
          if (x != head) good = false;  // a vertex at distance >= 2 from head
          stack.push_back(y);
        }
      }
      if (!good) bad_heads.push_back(t.label(head));
    }
    if (bad_heads.size() >= 3) return Obstruction{ObstructionKind::GoodComponents, bad_heads, {t.label(v)}, 0};
  }
  return std::nullopt;
}

/// Re-validates a witness against `g`.
inline bool recheck(const LabeledGraph& g, const Obstruction& ob) {
  std::vector<std::size_t> r;
  for (Label x : ob.witness) {
    auto rank = g.rank_of(x);
    if (!rank) return false;
    r.push_back(*rank);
  }
  auto sorted_distinct = [&] {
    return std::is_sorted(r.begin(), r.end()) && std::adjacent_find(r.begin(), r.end()) == r.end();
  };
  switch (ob.kind) {
    case ObstructionKind::I3: return r.size() == 3 && sorted_distinct() && detail::is_i3(g, r[0], r[1], r[2]);
    case ObstructionKind::J4: return r.size() == 4 && sorted_distinct() && detail::is_j4(g, r[0], r[1], r[2], r[3]);
    case ObstructionKind::Q4: return r.size() == 4 && sorted_distinct() && detail::is_q4(g, r[0], r[1], r[2], r[3]);
    case ObstructionKind::BadPath: {
      if (r.size() < 4) return false;
      if (std::set<std::size_t>(r.begin(), r.end()).size() != r.size()) return false;
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
          if (g.adjacent(r[i], r[j]) != (j == i + 1)) return false;
      const std::size_t hi_end = std::max(r.front(), r.back());
      return std::all_of(r.begin() + 1, r.end() - 1, [&](std::size_t v) { return v > hi_end; });
    }
    case ObstructionKind::CutsetOrder: {
      if (ob.split < 2 || r.size() < ob.split + 2 || ob.anchor.empty()) return false;
      std::vector<std::size_t> cut;
      for (Label x : ob.anchor) {
        auto rank = g.rank_of(x);
        if (!rank) return false;
        cut.push_back(*rank);
      }
      std::vector<std::size_t> a(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(ob.split));
      std::vector<std::size_t> b(r.begin() + static_cast<std::ptrdiff_t>(ob.split), r.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      auto comps = detail::components_without(g, cut);
      const bool a_is_comp = std::find(comps.begin(), comps.end(), a) != comps.end();
      const bool b_is_comp = std::find(comps.begin(), comps.end(), b) != comps.end();
      return a_is_comp && b_is_comp && a.front() < b.front() && detail::order_violated(a, b);
    }
    case ObstructionKind::GoodComponents: {
      if (!is_tree(g) || ob.anchor.size() != 1 || r.size() < 3) return false;
      auto center = g.rank_of(ob.anchor[0]);
      if (!center) return false;
      if (std::set<std::size_t>(r.begin(), r.end()).size() != r.size()) return false;
      std::set<Label> rest(g.labels().begin(), g.labels().end());
      rest.erase(ob.anchor[0]);
      const auto comps = connected_components(induced(g, rest));
      for (std::size_t h : r) {
        if (!g.adjacent(*center, h)) return false;
        const Label head = g.label(h);
        for (const auto& comp : comps) {
          if (std::find(comp.begin(), comp.end(), head) == comp.end()) continue;
          const bool star = std::all_of(comp.begin(), comp.end(),
                                        [&](Label x) { return x == head || g.has_edge(x, head); });
          if (star) return false;  // listed head is actually good
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace urep
