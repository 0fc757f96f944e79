#pragma once

// Exact bounded decision of 12-representability.
//
// Labeled: a word search over multiplicities {1,2}. The word is built left to
// right; every letter is in one of three states (unused, open = placed once
// and expecting a second copy, closed). For x < y:
//   edge xy      all copies of y precede all copies of x
//   non-edge xy  the first x precedes the last y
// so placing v needs every larger neighbor closed and every smaller neighbor
// unused, and closing v needs every smaller non-neighbor already placed. The
// outcome depends only on the state vector, so dead states are memoized.
//
// Unlabeled: labelings of [n] are assigned to vertices in rank order, pruned
// as soon as the assigned part contains I3, J4 or Q4, deduplicated up to
// automorphism and supplement, screened with the full labeled obstruction
// scan, and the survivors are word-searched.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "urep/classes.hpp"
#include "urep/error.hpp"
#include "urep/graph.hpp"
#include "urep/obstruction.hpp"
#include "urep/represent.hpp"
#include "urep/words.hpp"

namespace urep {

inline constexpr std::size_t kFullDecisionBound = 7;
inline constexpr std::size_t kObstructionOnlyBound = 12;
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

enum class Status { yes, no, unknown };

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::yes: return "yes";
    case Status::no: return "no";
    case Status::unknown: return "unknown";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;               // word-search states visited
  std::uint64_t labelings_pruned = 0;    // partial or full labelings cut by an obstruction
  std::uint64_t labelings_searched = 0;  // labeling classes handed to the word search
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct Certificate {
  Status status = Status::unknown;
  std::optional<Representation> representation;  // yes: the labeled graph and its word
  std::map<Label, Label> labeling;               // input label -> label in the representation
  std::optional<Obstruction> obstruction;        // witness in representation labels
  bool exhausted = false;                        // some labeling needed the full word search
  bool budget_hit = false;
  SearchStats stats;
};

struct RecognizeOptions {
  std::uint64_t budget = kDefaultBudget;  // word-search nodes per labeling
  std::size_t jobs = 1;
  bool obstruction_only = false;
  bool screen = true;  // labeled only: run the obstruction scan before searching
};

struct WordSearchResult {
  Status status = Status::unknown;
  Word word;
  std::uint64_t nodes = 0;
};

/// Searches for a word with every letter used once or twice that 12-represents
/// `g` (labels as given). Complete for 12 by the two-occurrence bound.
inline WordSearchResult search_word_12(const LabeledGraph& g, std::uint64_t budget = kDefaultBudget) {
  const std::size_t n = g.size();
  if (n > kObstructionOnlyBound)
    throw bound_error("search_word_12: " + std::to_string(n) + " vertices exceeds bound " +
                      std::to_string(kObstructionOnlyBound));
  WordSearchResult out;
  if (n == 0) {
    out.status = Status::yes;
    return out;
  }
  std::vector<std::uint32_t> up(n, 0), down(n, 0), nonedge_below(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u) {
      if (u == v) continue;
      if (g.adjacent(u, v)) (u > v ? up[v] : down[v]) |= 1u << u;
      else if (u < v) nonedge_below[v] |= 1u << u;
    }
  std::vector<std::uint32_t> pow3(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
  std::vector<std::uint8_t> dead(pow3[n], 0);

  // placed: state >= open; closed: state == closed.
  std::uint32_t placed = 0, closed = 0, code = 0;
  std::vector<std::size_t> word;
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  bool aborted = false;

  auto dfs = [&](auto&& self) -> bool {
    if (closed == all) return true;
    if (dead[code]) return false;
    if (++out.nodes > budget) {
      aborted = true;
      return false;
    }
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t bit = 1u << v;
      if (closed & bit) continue;
      if ((up[v] & ~closed) != 0) continue;
      if ((down[v] & placed) != 0) continue;
      const bool can_close = (nonedge_below[v] & ~placed) == 0;
      if (placed & bit) {
        // second copy closes v
        if (!can_close) continue;
        closed |= bit;
        code += pow3[v];
        word.push_back(v);
        if (self(self)) return true;
        word.pop_back();
        code -= pow3[v];
        closed &= ~bit;
      } else {
        // single copy, then first of two
        if (can_close) {
          placed |= bit;
          closed |= bit;
          code += 2 * pow3[v];
          word.push_back(v);
          if (self(self)) return true;
          word.pop_back();
          code -= 2 * pow3[v];
          closed &= ~bit;
          placed &= ~bit;
        }
        if (aborted) return false;
        placed |= bit;
        code += pow3[v];
        word.push_back(v);
        if (self(self)) return true;
        word.pop_back();
        code -= pow3[v];
        placed &= ~bit;
      }
      if (aborted) return false;
    }
    dead[code] = 1;
    return false;
  };

  if (dfs(dfs)) {
    out.status = Status::yes;
    std::vector<Letter> letters;
    for (std::size_t v : word) letters.push_back(g.label(v));
    out.word = Word(std::move(letters));
  } else {
    out.status = aborted ? Status::unknown : Status::no;
  }
  return out;
}

/// Decides whether `g` with its given labels is 12-representable.
inline Certificate is_12_representable_labeled(const LabeledGraph& g, const RecognizeOptions& opt = {}) {
  if (g.size() > kFullDecisionBound)
    throw bound_error("is_12_representable_labeled: " + std::to_string(g.size()) + " vertices exceeds bound " +
                      std::to_string(kFullDecisionBound));
  Certificate cert;
  for (Label x : g.labels()) cert.labeling[x] = x;
  if (opt.screen) {
    if (auto ob = find_obstruction_labeled(g)) {
      cert.status = Status::no;
      cert.obstruction = std::move(ob);
      cert.stats.labelings_pruned = 1;
      return cert;
    }
  }
  if (opt.obstruction_only) return cert;
  cert.stats.labelings_searched = 1;
  auto found = search_word_12(g, opt.budget);
  cert.stats.nodes = found.nodes;
  cert.status = found.status;
  cert.exhausted = found.status == Status::no;
  cert.budget_hit = found.status == Status::unknown;
  if (found.status == Status::yes) cert.representation = Representation::checked(g, Pattern::parse("12"), found.word);
  return cert;
}

namespace detail {

// Labeled shapes among vertices with labels lab[...]; true when the assigned
// vertex set {a, b, c} reduces to I3.
inline bool induces_i3(const LabeledGraph& g, const std::vector<Label>& lab, std::size_t a, std::size_t b,
                       std::size_t c) {
  std::size_t v[3] = {a, b, c};
  std::sort(v, v + 3, [&](std::size_t x, std::size_t y) { return lab[x] < lab[y]; });
  return is_i3(g, v[0], v[1], v[2]);
}

inline bool induces_j4_or_q4(const LabeledGraph& g, const std::vector<Label>& lab, std::size_t a, std::size_t b,
                             std::size_t c, std::size_t d) {
  std::size_t v[4] = {a, b, c, d};
  std::sort(v, v + 4, [&](std::size_t x, std::size_t y) { return lab[x] < lab[y]; });
  return is_j4(g, v[0], v[1], v[2], v[3]) || is_q4(g, v[0], v[1], v[2], v[3]);
}

// Does assigning vertex i (already written into lab) create I3, J4 or Q4
// among vertices 0..i?
inline bool partial_obstruction(const LabeledGraph& g, const std::vector<Label>& lab, std::size_t i) {
  for (std::size_t a = 0; a < i; ++a)
    for (std::size_t b = a + 1; b < i; ++b) {
      if (induces_i3(g, lab, a, b, i)) return true;
      // 2K2 needs i adjacent to exactly one of the other three
      for (std::size_t c = b + 1; c < i; ++c)
        if (induces_j4_or_q4(g, lab, a, b, c, i)) return true;
    }
  return false;
}

inline std::string adjacency_key(const LabeledGraph& h) {
  std::string s;
  s.reserve(h.size() * h.size() / 2);
  for (std::size_t j = 1; j < h.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) s.push_back(h.adjacent(i, j) ? '1' : '0');
  return s;
}

}  // namespace detail

/// Decides whether some labeling of `g` is 12-representable.
///
/// Full mode needs n <= 7. Obstruction-only mode (n <= 12) skips the word
/// search: it answers no when every labeling is refuted by an obstruction and
/// unknown otherwise.
inline Certificate is_12_representable(const LabeledGraph& g, const RecognizeOptions& opt = {}) {
  const std::size_t n = g.size();
  const std::size_t bound = opt.obstruction_only ? kObstructionOnlyBound : kFullDecisionBound;
  if (n > bound)
    throw bound_error("is_12_representable: " + std::to_string(n) + " vertices exceeds " +
                      (opt.obstruction_only ? "obstruction-only" : "full-decision") + " bound " +
                      std::to_string(bound));
  Certificate cert;
  const Pattern p12 = Pattern::parse("12");
  const LabeledGraph base = reduce_graph(g);
  auto identity_labeling = [&] {
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < n; ++i) m[g.label(i)] = static_cast<Label>(i + 1);
    return m;
  };

  if (n > 0 && is_tree(g)) {
    if (auto ob = find_obstruction_tree(g)) {
      cert.status = Status::no;
      cert.obstruction = std::move(ob);
      for (Label x : g.labels()) cert.labeling[x] = x;
      return cert;
    }
  }

  // Enumerate labeling classes in lexicographic order.
  std::vector<Label> lab(n, 0);
  std::uint32_t used = 0;
  std::set<std::string> seen;
  std::vector<std::vector<Label>> candidates;
  bool stop = false;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == n) {
      std::map<Label, Label> m;
      for (std::size_t v = 0; v < n; ++v) m[base.label(v)] = lab[v];
      LabeledGraph h = relabel(base, m);
      std::string key = detail::adjacency_key(h);
      std::string sup = detail::adjacency_key(supplement(h));
      if (!seen.insert(std::min(key, sup)).second) return;
      if (find_obstruction_labeled(h)) {
        ++cert.stats.labelings_pruned;
        return;
      }
      candidates.push_back(lab);
      if (opt.obstruction_only) stop = true;
      return;
    }
    for (Label l = 1; l <= n; ++l) {
      if (used & (1u << l)) continue;
      lab[i] = l;
      if (detail::partial_obstruction(base, lab, i)) {
        ++cert.stats.labelings_pruned;
        continue;
      }
      used |= 1u << l;
      self(self, i + 1);
      used &= ~(1u << l);
      if (stop) return;
    }
  };
  dfs(dfs, 0);

  auto refuted_by_obstruction = [&] {
    cert.status = Status::no;
    cert.labeling = identity_labeling();
    cert.obstruction = find_obstruction_labeled(base);
  };

  if (candidates.empty()) {
    refuted_by_obstruction();
    return cert;
  }
  if (opt.obstruction_only) {
    cert.status = Status::unknown;
    return cert;
  }

  // Word search over the surviving classes; the smallest successful index wins.
  const std::size_t m = candidates.size();
  std::vector<WordSearchResult> results(m);
  std::vector<LabeledGraph> graphs;
  graphs.reserve(m);
  for (const auto& c : candidates) {
    std::map<Label, Label> mp;
    for (std::size_t v = 0; v < n; ++v) mp[base.label(v)] = c[v];
    graphs.push_back(relabel(base, mp));
  }
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0}, best{none};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= m || i > best.load()) return;
      results[i] = search_word_12(graphs[i], opt.budget);
      if (results[i].status == Status::yes) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, m));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const std::size_t winner = best.load();
  const std::size_t last = winner == none ? m : winner + 1;
  for (std::size_t i = 0; i < last; ++i) {
    cert.stats.nodes += results[i].nodes;
    ++cert.stats.labelings_searched;
    if (results[i].status == Status::no) cert.exhausted = true;
    if (results[i].status == Status::unknown) cert.budget_hit = true;
  }
  if (winner != none) {
    cert.status = Status::yes;
    for (std::size_t v = 0; v < n; ++v) cert.labeling[g.label(v)] = candidates[winner][v];
    cert.representation = Representation::checked(graphs[winner], p12, results[winner].word);
    return cert;
  }
  if (cert.budget_hit) {
    cert.status = Status::unknown;
    return cert;
  }
  cert.status = Status::no;
  cert.labeling = identity_labeling();
  cert.obstruction = find_obstruction_labeled(base);
  return cert;
}

}  // namespace urep
