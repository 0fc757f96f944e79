#pragma once

// u-representation semantics.
//
// A word w u-represents a labeled graph G when the alphabet of w is the vertex
// set and, for every pair x != y, xy is an edge exactly when the restriction
// of w to {x, y} has no u-match. Equality here is labeled equality: for
// patterns like 12 the labeling matters, so nothing in this header works up
// to isomorphism.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "urep/error.hpp"
#include "urep/graph.hpp"
#include "urep/words.hpp"

namespace urep {

inline LabeledGraph decode(const Word& w, const Pattern& u) {
  if (w.empty()) throw precondition_error("decode: empty word");
  const auto letters = alphabet(w);
  LabeledGraph g(std::vector<Label>(letters.begin(), letters.end()));
  std::vector<Letter> buffer;
  buffer.reserve(w.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Letter x = g.label(i), y = g.label(j);
      buffer.clear();
      for (Letter c : w)
        if (c == x || c == y) buffer.push_back(c);
      if (!has_match(std::span<const Letter>(buffer), u)) g.set_adjacent(i, j, true);
    }
  }
  return g;
}

inline bool verifies(const Word& w, const LabeledGraph& g, const Pattern& u) {
  if (w.empty()) return g.size() == 0;
  const auto letters = alphabet(w);
  if (!std::equal(letters.begin(), letters.end(), g.labels().begin(), g.labels().end())) return false;
  return decode(w, u) == g;
}

struct Representation {
  LabeledGraph graph;
  Pattern pattern;
  Word word;

  /// The graph that `word` represents under `pattern`.
  static Representation from_word(Word word, Pattern pattern) {
    LabeledGraph g = decode(word, pattern);
    return {std::move(g), std::move(pattern), std::move(word)};
  }

  /// Builds a representation, enforcing that the word verifies.
  static Representation checked(LabeledGraph graph, Pattern pattern, Word word) {
    if (!verifies(word, graph, pattern))
      throw std::logic_error("word " + to_string(word) + " does not " + pattern.to_string() +
                             "-represent the claimed graph");
    return {std::move(graph), std::move(pattern), std::move(word)};
  }

  bool valid() const { return verifies(word, graph, pattern); }
};

/// Keeps only the first and last occurrence of every letter. Preserves the
/// decoded graph under 12 because inner copies never decide an adjacency.
inline Word normalize_12(const Word& w) {
  std::map<Letter, std::size_t> first, last;
  for (std::size_t i = 0; i < w.size(); ++i) {
    first.try_emplace(w[i], i);
    last[w[i]] = i;
  }
  std::vector<Letter> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (first[w[i]] == i || last[w[i]] == i) out.push_back(w[i]);
  return Word(std::move(out));
}

/// Doubles every letter that occurs once, in place. Requires multiplicities <= 2.
inline Word pad_to_exactly_two(const Word& w) {
  std::map<Letter, int> count;
  for (Letter x : w)
    if (++count[x] > 2) throw precondition_error("pad_to_exactly_two: letter " + std::to_string(x) + " occurs more than twice");
  std::vector<Letter> out;
  for (Letter x : w) {
    out.push_back(x);
    if (count[x] == 1) out.push_back(x);
  }
  return Word(std::move(out));
}

/// (w^r)^c. When w 12-represents G on {1..n}, the result 12-represents the
/// supplement of G.
inline Word transform_reverse_complement(const Word& w) {
  if (w.empty()) throw precondition_error("transform_reverse_complement: empty word");
  return complement_word(reverse(w));
}

inline Representation restrict_representation(const Representation& rep, const std::set<Label>& keep) {
  for (Label x : keep)
    if (!rep.graph.contains(x)) throw precondition_error("restrict_representation: " + std::to_string(x) + " is not a vertex");
  return {induced(rep.graph, keep), rep.pattern, restrict(rep.word, keep)};
}

/// Adds `offset` to every label (order preserving, so validity is kept).
inline Representation shift_representation(const Representation& rep, Label offset) {
  std::map<Label, Label> m;
  for (Label x : rep.graph.labels()) m[x] = x + offset;
  std::vector<Letter> letters;
  for (Letter x : rep.word) letters.push_back(x + offset);
  return {relabel(rep.graph, m), rep.pattern, Word(std::move(letters))};
}

/// Relabels to {1..n} preserving order.
inline Representation reduce_representation(const Representation& rep) {
  return {reduce_graph(rep.graph), rep.pattern, reduce(rep.word)};
}

/// The supplement of a 12-representation on {1..n}.
inline Representation supplement_representation(const Representation& rep) {
  if (rep.pattern != Pattern::parse("12")) throw precondition_error("supplement_representation: pattern must be 12");
  return {supplement(rep.graph), rep.pattern, transform_reverse_complement(rep.word)};
}

}  // namespace urep
