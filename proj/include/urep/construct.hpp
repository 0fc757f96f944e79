#pragma once

// Constructive encoders. Every constructor checks its own output with
// `verifies` and throws std::logic_error if that ever fails.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "urep/canonical.hpp"
#include "urep/classes.hpp"
#include "urep/error.hpp"
#include "urep/generators.hpp"
#include "urep/graph.hpp"
#include "urep/recognize.hpp"
#include "urep/represent.hpp"
#include "urep/words.hpp"

namespace urep {

struct ConstructionResult {
  std::string method;
  Pattern pattern = Pattern::parse("12");
  Word word;
  LabeledGraph graph;                      // the input graph after relabeling
  std::map<std::string, Label> labeling;   // input vertex -> label in `word`

  Representation representation() const { return {graph, pattern, word}; }
};

namespace detail {

inline void self_verify(const Word& w, const LabeledGraph& g, const Pattern& u, std::string_view who) {
  if (!verifies(w, g, u))
    throw std::logic_error(std::string(who) + ": constructed word " + to_string(w) + " does not " + u.to_string() +
                           "-represent its target");
}

inline void require_range(const LabeledGraph& g, std::string_view who) {
  if (!g.on_range()) throw precondition_error(std::string(who) + ": labels must be 1..n");
}

inline std::map<std::string, Label> string_keys(const std::map<Label, Label>& m, const std::string& prefix = "") {
  std::map<std::string, Label> out;
  for (auto [k, v] : m) out[prefix + std::to_string(k)] = v;
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1^k

/// Letters in order of first occurrence.
inline Word initial_permutation(const Word& w) {
  std::set<Letter> seen;
  std::vector<Letter> out;
  for (Letter x : w)
    if (seen.insert(x).second) out.push_back(x);
  return Word(std::move(out));
}

/// Starts from 1 2 ... n and, for each non-edge ij in lexicographic order,
/// prepends i^(k-1) pi i p(w), with pi the ascending word on [n] - {i, j}.
inline Word represent_1k(const LabeledGraph& g, int k) {
  if (k < 3) throw precondition_error("represent_1k: k must be at least 3, got " + std::to_string(k));
  detail::require_range(g, "represent_1k");
  const std::size_t n = g.size();
  std::vector<Letter> w(n);
  std::iota(w.begin(), w.end(), Letter{1});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      const Letter li = static_cast<Letter>(i + 1), lj = static_cast<Letter>(j + 1);
      std::vector<Letter> next(static_cast<std::size_t>(k - 1), li);
      for (Letter x = 1; x <= n; ++x)
        if (x != li && x != lj) next.push_back(x);
      next.push_back(li);
      const Word p = initial_permutation(Word(w));
      next.insert(next.end(), p.begin(), p.end());
      next.insert(next.end(), w.begin(), w.end());
      w = std::move(next);
    }
  Word out(std::move(w));
  if (n > 0) detail::self_verify(out, g, Pattern::ones(static_cast<std::size_t>(k)), "represent_1k");
  return out;
}

// ---------------------------------------------------------------------------
// Permutations

/// A permutation of [n] in which, for i < j, j precedes i exactly when ij is an
/// edge. Kahn's algorithm on that tournament, smallest ready label first.
inline std::optional<Word> represent_permutation_graph(const LabeledGraph& g) {
  detail::require_range(g, "represent_permutation_graph");
  const std::size_t n = g.size();
  auto before = [&](std::size_t a, std::size_t b) { return a < b ? !g.adjacent(a, b) : g.adjacent(a, b); };
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && before(a, b)) ++indegree[b];
  std::vector<char> done(n, 0);
  std::vector<Letter> sigma;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v)
      if (!done[v] && indegree[v] == 0) pick = v;
    if (pick == n) return std::nullopt;
    done[pick] = 1;
    sigma.push_back(static_cast<Letter>(pick + 1));
    for (std::size_t b = 0; b < n; ++b)
      if (!done[b] && before(pick, b)) --indegree[b];
  }
  Word out(std::move(sigma));
  if (n > 0) detail::self_verify(out, g, Pattern::parse("12"), "represent_permutation_graph");
  return out;
}

// ---------------------------------------------------------------------------
// Intervals

struct Interval {
  double left = 0;
  double right = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Intersection graph on {1..n}, vertex i+1 for intervals[i].
inline LabeledGraph intersection_graph(const std::vector<Interval>& intervals) {
  LabeledGraph g = LabeledGraph::on_range(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t j = i + 1; j < intervals.size(); ++j)
      if (intervals[i].left <= intervals[j].right && intervals[j].left <= intervals[i].right) g.set_adjacent(i, j, true);
  return g;
}

/// Interval with the i-th smallest left endpoint gets label n-i+1; the word
/// lists endpoint labels left to right. Labeling keys are 1-based interval
/// indices.
inline ConstructionResult represent_co_interval(const std::vector<Interval>& intervals) {
  const std::size_t n = intervals.size();
  if (n == 0) throw precondition_error("represent_co_interval: no intervals");
  std::vector<std::pair<double, std::size_t>> points;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(intervals[i].left < intervals[i].right))
      throw precondition_error("represent_co_interval: interval " + std::to_string(i + 1) + " has left >= right");
    points.emplace_back(intervals[i].left, i);
    points.emplace_back(intervals[i].right, i);
  }
  std::sort(points.begin(), points.end());
  for (std::size_t p = 1; p < points.size(); ++p)
    if (points[p].first == points[p - 1].first)
      throw precondition_error("represent_co_interval: duplicate endpoint " + std::to_string(points[p].first));
  std::vector<std::size_t> by_left(n);
  std::iota(by_left.begin(), by_left.end(), std::size_t{0});
  std::sort(by_left.begin(), by_left.end(), [&](std::size_t a, std::size_t b) { return intervals[a].left < intervals[b].left; });
  std::map<Label, Label> label;
  for (std::size_t i = 0; i < n; ++i) label[static_cast<Label>(by_left[i] + 1)] = static_cast<Label>(n - i);
  std::vector<Letter> w;
  for (auto [x, i] : points) w.push_back(label[static_cast<Label>(i + 1)]);
  ConstructionResult out;
  out.method = "cointerval";
  out.word = Word(std::move(w));
  out.graph = relabel(complement_graph(intersection_graph(intervals)), label);
  out.labeling = detail::string_keys(label);
  detail::self_verify(out.word, out.graph, out.pattern, "represent_co_interval");
  return out;
}

inline constexpr std::size_t kRealizeBound = 8;

/// Intervals (indexed by rank in `g`) whose intersection graph is the
/// complement of `g`, or nothing when that complement is not an interval
/// graph. Searches orderings of the maximal cliques for one in which every
/// vertex's cliques are consecutive.
inline std::optional<std::vector<Interval>> realize_intervals(const LabeledGraph& g) {
  const std::size_t n = g.size();
  if (n > kRealizeBound)
    throw bound_error("realize_intervals: " + std::to_string(n) + " vertices exceeds bound " +
                      std::to_string(kRealizeBound));
  if (n == 0) return std::vector<Interval>{};
  const LabeledGraph h = complement_graph(g);
  if (!is_chordal(h)) return std::nullopt;
  auto is_clique = [&](std::uint32_t s) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if ((s >> a & 1u) && (s >> b & 1u) && !h.adjacent(a, b)) return false;
    return true;
  };
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (!is_clique(s)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(s >> v & 1u) && is_clique(s | (1u << v))) maximal = false;
    if (maximal) cliques.push_back(s);
  }
  std::vector<std::size_t> order(cliques.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    std::vector<int> first(n, -1), last(n, -1);
    bool consecutive = true;
    for (std::size_t p = 0; p < order.size() && consecutive; ++p)
      for (std::size_t v = 0; v < n; ++v) {
        if (!(cliques[order[p]] >> v & 1u)) continue;
        if (first[v] == -1) first[v] = static_cast<int>(p);
        else if (last[v] != static_cast<int>(p) - 1) consecutive = false;
        last[v] = static_cast<int>(p);
      }
    if (!consecutive) continue;
    const double s = 4.0 * static_cast<double>(n);
    std::vector<Interval> out(n);
    for (std::size_t v = 0; v < n; ++v) {
      out[v].left = s * first[v] + static_cast<double>(v);
      out[v].right = s * last[v] + 2.0 * static_cast<double>(n) + static_cast<double>(v);
    }
    if (!(reduce_graph(intersection_graph(out)) == reduce_graph(h)))
      throw std::logic_error("realize_intervals: placement does not reproduce the complement");
    return out;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Trees

/// Two-line base word for the uniform double caterpillar on a spine of two
/// vertices: 2 (4 3)(6 5)...(2k+2 2k+1) (2k+4)(2k+6)...(4k+2) (4k+4), then
/// 1 3 ... (2k+1) (2k+4 2k+3)...(4k+2 4k+1) (4k+3).
inline Word dc_base_word(int k) {
  if (k < 1) throw precondition_error("dc_base_word: k must be at least 1, got " + std::to_string(k));
  const Letter K = static_cast<Letter>(k);
  std::vector<Letter> w{2};
  for (Letter a = 4; a <= 2 * K + 2; a += 2) {
    w.push_back(a);
    w.push_back(a - 1);
  }
  for (Letter a = 2 * K + 4; a <= 4 * K + 2; a += 2) w.push_back(a);
  w.push_back(4 * K + 4);
  for (Letter a = 1; a <= 2 * K + 1; a += 2) w.push_back(a);
  for (Letter a = 2 * K + 4; a <= 4 * K + 2; a += 2) {
    w.push_back(a);
    w.push_back(a - 1);
  }
  w.push_back(4 * K + 3);
  return Word(std::move(w));
}

/// Joins repG on {1..k} and repH on {k+1..l} by the edge between k and k+1.
/// The two end labels trade places: x becomes k+1 and y becomes k.
inline Representation glue(const Representation& rep_g, const Representation& rep_h, Label x, Label y) {
  const Pattern p12 = Pattern::parse("12");
  if (rep_g.pattern != p12 || rep_h.pattern != p12) throw precondition_error("glue: pattern must be 12");
  const std::size_t k = rep_g.graph.size();
  if (k == 0 || !rep_g.graph.on_range()) throw precondition_error("glue: first graph must be labeled 1..k");
  const auto& hl = rep_h.graph.labels();
  for (std::size_t i = 0; i < hl.size(); ++i)
    if (hl[i] != k + 1 + i) throw precondition_error("glue: second graph must be labeled k+1..l");
  if (hl.empty()) throw precondition_error("glue: second graph is empty");
  if (x != k) throw precondition_error("glue: x must carry the largest label of the first graph");
  if (y != k + 1) throw precondition_error("glue: y must carry the smallest label of the second graph");
  auto swap_xy = [&](Letter c) { return c == x ? y : c == y ? x : c; };
  std::vector<Letter> w;
  for (Letter c : rep_g.word) w.push_back(swap_xy(c));
  for (Letter c : rep_h.word) w.push_back(swap_xy(c));
  std::vector<Label> labels(k + hl.size());
  std::iota(labels.begin(), labels.end(), Label{1});
  LabeledGraph g(labels);
  for (auto [a, b] : rep_g.graph.edges()) g.add_edge(swap_xy(a), swap_xy(b));
  for (auto [a, b] : rep_h.graph.edges()) g.add_edge(swap_xy(a), swap_xy(b));
  g.add_edge(x, y);
  return Representation::checked(std::move(g), p12, Word(std::move(w)));
}

struct GlueResult {
  Representation representation;
  std::map<Label, Label> from_g, from_h;  // original label -> glued label
};

/// glue for arbitrary 12-representations: labels are reduced and a side is
/// supplemented when x (resp. y) sits at the wrong extreme. x must be the
/// smallest or largest label of G, and likewise y in H.
inline GlueResult glue_at(const Representation& rep_g, Label x, const Representation& rep_h, Label y) {
  auto normalize = [](const Representation& rep, Label v, bool want_max, const char* side) {
    if (!rep.graph.contains(v)) throw precondition_error(std::string("glue: ") + side + " has no vertex " + std::to_string(v));
    auto red = reduce_representation(rep);
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < rep.graph.size(); ++i) m[rep.graph.label(i)] = static_cast<Label>(i + 1);
    const Label n = static_cast<Label>(rep.graph.size());
    const Label at = m[v];
    const bool is_target = want_max ? at == n : at == 1;
    const bool is_other = want_max ? at == 1 : at == n;
    if (!is_target) {
      if (!is_other)
        throw precondition_error(std::string("glue: vertex ") + std::to_string(v) + " is neither the smallest nor the largest label of " + side);
      red = supplement_representation(red);
      for (auto& [k, l] : m) l = n + 1 - l;
    }
    return std::pair{red, m};
  };
  auto [g, mg] = normalize(rep_g, x, true, "G");
  auto [h, mh] = normalize(rep_h, y, false, "H");
  const Label k = static_cast<Label>(g.graph.size());
  h = shift_representation(h, k);
  for (auto& [o, l] : mh) l += k;
  GlueResult out{glue(g, h, k, k + 1), mg, mh};
  out.from_g[x] = k + 1;
  out.from_h[y] = k;
  return out;
}

/// Inserts a copy of v: labels above v shift up and every v becomes "v v+1".
/// The copy is v+1 and is not adjacent to v.
inline Representation add_copy_repr(const Representation& rep, Label v) {
  if (rep.pattern != Pattern::parse("12")) throw precondition_error("add_copy_repr: pattern must be 12");
  if (!rep.graph.contains(v)) throw precondition_error("add_copy_repr: " + std::to_string(v) + " is not a vertex");
  std::vector<Letter> w;
  for (Letter c : rep.word) {
    if (c == v) {
      w.push_back(v);
      w.push_back(v + 1);
    } else {
      w.push_back(c > v ? c + 1 : c);
    }
  }
  std::map<Label, Label> shift;
  for (Label x : rep.graph.labels()) shift[x] = x > v ? x + 1 : x;
  LabeledGraph g = add_copy(relabel(rep.graph, shift), v, v + 1);
  return Representation::checked(std::move(g), rep.pattern, Word(std::move(w)));
}

namespace detail {

// Children of spine vertex s that are not on the spine, split into leaves and
// middles (non-leaves), each list sorted by label.
struct SpineSlot {
  std::vector<std::size_t> leaves, middles;
};

inline SpineSlot slot_of(const LabeledGraph& t, std::size_t s, const std::vector<char>& on_spine) {
  SpineSlot out;
  for (std::size_t u : t.neighbors(s)) {
    if (on_spine[u]) continue;
    (t.degree(u) == 1 ? out.leaves : out.middles).push_back(u);
  }
  return out;
}

inline std::size_t leaf_of(const LabeledGraph& t, std::size_t middle, std::size_t parent) {
  for (std::size_t u : t.neighbors(middle))
    if (u != parent) return u;
  throw std::logic_error("middle vertex without a leaf");
}

inline ConstructionResult dc_trivial(const LabeledGraph& t) {
  ConstructionResult out;
  out.method = "dcat";
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < t.size(); ++i) m[t.label(i)] = static_cast<Label>(i + 1);
  out.graph = relabel(t, m);
  out.labeling = string_keys(m);
  out.word = t.size() == 1 ? Word({1}) : Word({2, 1});
  return out;
}

}  // namespace detail

/// 12-representation of a double caterpillar. The tree minus duplicate sibling
/// leaves is embedded in a uniform double caterpillar with an even spine,
/// whose word is a glued chain of base words; restricting to the image and
/// re-inserting the duplicate leaves as copies gives the result. Returns
/// nothing when `t` is not a double caterpillar.
inline std::optional<ConstructionResult> represent_double_caterpillar(const LabeledGraph& t) {
  if (!is_tree(t)) throw precondition_error("represent_double_caterpillar: input is not a tree");
  const auto dc = is_double_caterpillar(t);
  if (!dc.is_double_caterpillar) return std::nullopt;
  if (t.size() <= 2) return detail::dc_trivial(t);

  const std::size_t n = t.size();
  std::vector<std::size_t> spine;
  for (Label x : dc.spine) spine.push_back(*t.rank_of(x));
  if (spine.empty()) spine.push_back(detail::tree_centers(t).front());
  std::vector<char> on_spine(n, 0);
  for (std::size_t s : spine) on_spine[s] = 1;

  // Keep one leaf per parent; the rest are copies of the kept one.
  std::vector<std::pair<std::size_t, std::size_t>> copies;  // (kept, extra)
  std::vector<detail::SpineSlot> slots;
  std::size_t k = 1;
  for (std::size_t s : spine) {
    auto slot = detail::slot_of(t, s, on_spine);
    for (std::size_t i = 1; i < slot.leaves.size(); ++i) copies.emplace_back(slot.leaves[0], slot.leaves[i]);
    for (std::size_t m : slot.middles) {
      std::vector<std::size_t> below;
      for (std::size_t u : t.neighbors(m))
        if (u != s) below.push_back(u);
      for (std::size_t i = 1; i < below.size(); ++i) copies.emplace_back(below[0], below[i]);
    }
    k = std::max(k, slot.middles.size());
    slots.push_back(std::move(slot));
  }

  // Word for the uniform double caterpillar with 2r spine vertices.
  const std::size_t r = (spine.size() + 1) / 2;
  const Representation base = Representation::from_word(dc_base_word(static_cast<int>(k)), Pattern::parse("12"));
  Representation chain = base;
  for (std::size_t i = 1; i < r; ++i) {
    const Label top = static_cast<Label>(chain.graph.size());
    chain = glue(chain, shift_representation(base, top), top, top + 1);
  }
  const LabeledGraph& u = chain.graph;
  const auto udc = is_double_caterpillar(u);
  if (!udc.is_double_caterpillar || udc.spine.size() != 2 * r)
    throw std::logic_error("represent_double_caterpillar: chained base words lost the uniform shape");
  std::vector<char> u_on_spine(u.size(), 0);
  std::vector<std::size_t> uspine;
  for (Label x : udc.spine) {
    uspine.push_back(*u.rank_of(x));
    u_on_spine[uspine.back()] = 1;
  }

  // Embed: spine position i of t goes to spine position i of u.
  std::map<Label, Label> embed;  // t label -> u label
  for (std::size_t i = 0; i < spine.size(); ++i) {
    const std::size_t s = spine[i], us = uspine[i];
    embed[t.label(s)] = u.label(us);
    const auto target = detail::slot_of(u, us, u_on_spine);
    if (!slots[i].leaves.empty()) embed[t.label(slots[i].leaves[0])] = u.label(target.leaves.at(0));
    for (std::size_t j = 0; j < slots[i].middles.size(); ++j) {
      const std::size_t m = slots[i].middles[j], um = target.middles.at(j);
      embed[t.label(m)] = u.label(um);
      embed[t.label(detail::leaf_of(t, m, s))] = u.label(detail::leaf_of(u, um, us));
    }
  }
  // leaf_of picks the smallest non-parent neighbor, which is the kept leaf
  for (auto [kept, extra] : copies) embed.erase(t.label(extra));

  std::set<Label> image;
  for (auto [a, b] : embed) image.insert(b);
  Representation rep = reduce_representation(restrict_representation(chain, image));
  std::map<Label, Label> current;  // t label -> label in rep
  {
    std::map<Label, Label> squeeze;
    Label next = 1;
    for (Label x : image) squeeze[x] = next++;
    for (auto [a, b] : embed) current[a] = squeeze[b];
  }
  for (auto [kept, extra] : copies) {
    const Label v = current.at(t.label(kept));
    rep = add_copy_repr(rep, v);
    for (auto& [a, b] : current)
      if (b > v) ++b;
    current[t.label(extra)] = v + 1;
  }

  ConstructionResult out;
  out.method = "dcat";
  out.word = rep.word;
  out.labeling = detail::string_keys(current);
  if (current.size() == n) out.graph = relabel(t, current);
  if (current.size() != n || !verifies(out.word, out.graph, out.pattern)) {
    if (n > kFullDecisionBound) throw std::logic_error("represent_double_caterpillar: embedding failed to verify");
    auto cert = is_12_representable(t);
    if (cert.status != Status::yes) throw std::logic_error("represent_double_caterpillar: fallback search failed");
    out.method = "dcat-search";
    out.word = cert.representation->word;
    out.graph = cert.representation->graph;
    out.labeling = detail::string_keys(cert.labeling);
  }
  detail::self_verify(out.word, out.graph, out.pattern, "represent_double_caterpillar");
  return out;
}

// ---------------------------------------------------------------------------
// Grid strips

namespace detail {

inline void require_k(int k, const char* who) {
  if (k < 1) throw precondition_error(std::string(who) + ": k must be at least 1, got " + std::to_string(k));
}

// (2t+3, t == 1 ? 1 : 2t-2) for t = 1..count
inline void push_opening_pairs(std::vector<Letter>& w, Letter count) {
  for (Letter t = 1; t <= count; ++t) {
    w.push_back(2 * t + 3);
    w.push_back(t == 1 ? 1 : 2 * t - 2);
  }
}

}  // namespace detail

/// Word for the L-shaped strip corner(k).
inline Word corner_word(int k) {
  detail::require_k(k, "corner_word");
  if (k == 1) return Word({3, 5, 1, 7, 4, 8, 2, 4, 6});
  const Letter K = static_cast<Letter>(k);
  std::vector<Letter> w{3};
  detail::push_opening_pairs(w, 2 * K - 1);
  for (Letter c : {4 * K + 3, 4 * K, 4 * K + 5, 4 * K - 2, 4 * K}) w.push_back(c);
  for (Letter s = 0; s + 4 <= 2 * K; ++s) {
    w.push_back(4 * K + 7 + 2 * s);
    w.push_back(4 * K + 2 + 2 * s);
  }
  for (Letter c : {8 * K, 8 * K - 4, 8 * K - 2}) w.push_back(c);
  return Word(std::move(w));
}

/// Word for the Z-shaped strip skew_ladder(k).
inline Word skew_ladder_word(int k) {
  detail::require_k(k, "skew_ladder_word");
  if (k == 1) return Word({3, 5, 7, 1, 5, 2, 9, 6, 10, 4, 6, 8});
  const Letter K = static_cast<Letter>(k);
  std::vector<Letter> w{3};
  detail::push_opening_pairs(w, 2 * K - 2);
  for (Letter c : {4 * K + 1, 4 * K + 3, 4 * K - 4, 4 * K + 1, 4 * K - 2, 4 * K + 5, 4 * K + 2, 4 * K + 7, 4 * K,
                   4 * K + 2})
    w.push_back(c);
  for (Letter s = 0; s + 4 <= 2 * K; ++s) {
    w.push_back(4 * K + 9 + 2 * s);
    w.push_back(4 * K + 4 + 2 * s);
  }
  for (Letter c : {8 * K + 2, 8 * K - 2, 8 * K}) w.push_back(c);
  return Word(std::move(w));
}

/// Word for ladder(k) (k rungs): corner_word restricted to the first rungs of
/// its vertical arm, reduced.
inline Word ladder_word(int k) {
  detail::require_k(k, "ladder_word");
  int host = 2;
  while (2 * host + 1 < k) ++host;
  std::set<Letter> keep{1, 3};
  for (Letter r = 1; r < static_cast<Letter>(k); ++r) {
    keep.insert(2 * r);
    keep.insert(2 * r + 3);
  }
  return reduce(restrict(corner_word(host), keep));
}

/// Runs one of the strip words and matches its decode against the generator.
/// Labeling keys are generator labels.
inline ConstructionResult construct_strip(Family family, int k) {
  Word w;
  LabeledGraph target;
  std::string method;
  switch (family) {
    case Family::corner: w = corner_word(k); target = corner_graph(k); method = "corner"; break;
    case Family::skew_ladder: w = skew_ladder_word(k); target = skew_ladder_graph(k); method = "skewladder"; break;
    case Family::ladder: w = ladder_word(k); target = ladder_graph(k); method = "ladder"; break;
    default: throw precondition_error("construct_strip: family must be corner, skew_ladder or ladder");
  }
  ConstructionResult out;
  out.method = method;
  out.word = w;
  out.graph = decode(w, out.pattern);
  auto iso = find_isomorphism(target, out.graph);
  if (!iso) throw std::logic_error("construct_strip: decoded word is not isomorphic to the " + method + " generator");
  out.labeling = detail::string_keys(*iso);
  detail::self_verify(out.word, relabel(target, *iso), out.pattern, "construct_strip");
  return out;
}

}  // namespace urep
