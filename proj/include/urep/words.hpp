#pragma once

// Words over the positive integers and patterns over {1,2}.
//
// A Word is the universal carrier of representations: an arbitrary finite
// sequence of positive letters. A Pattern is a nonempty reduced word over
// {1,2} (11, 12, 21, 111, ...) used as the matching template.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "urep/error.hpp"

namespace urep {

using Letter = std::uint32_t;
using Label = Letter;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) { check(); }
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { check(); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }

  void push_back(Letter x) {
    if (x == 0) throw precondition_error("word letters must be positive");
    letters_.push_back(x);
  }
  void append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void check() const {
    if (std::find(letters_.begin(), letters_.end(), Letter{0}) != letters_.end())
      throw precondition_error("word letters must be positive");
  }

  std::vector<Letter> letters_;
};

/// Replaces the i-th smallest distinct letter by i.
inline Word reduce(const Word& w) {
  std::vector<Letter> distinct(w.begin(), w.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), x);
    out.push_back(static_cast<Letter>(it - distinct.begin()) + 1);
  }
  return Word(std::move(out));
}

inline std::set<Letter> alphabet(const Word& w) { return {w.begin(), w.end()}; }

/// Subsequence of `w` keeping exactly the letters in `keep`.
inline Word restrict(const Word& w, const std::set<Letter>& keep) {
  std::vector<Letter> out;
  for (Letter x : w)
    if (keep.contains(x)) out.push_back(x);
  return Word(std::move(out));
}

/// Two-letter restriction, the hot path of decoding.
inline Word restrict(const Word& w, Letter x, Letter y) {
  std::vector<Letter> out;
  for (Letter c : w)
    if (c == x || c == y) out.push_back(c);
  return Word(std::move(out));
}

inline Word reverse(const Word& w) {
  return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
}

/// Maps every letter x to n+1-x where n is the largest letter of `w`.
inline Word complement_word(const Word& w) {
  if (w.empty()) throw precondition_error("complement of the empty word: undefined maximum");
  const Letter n = *std::max_element(w.begin(), w.end());
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(n + 1 - x);
  return Word(std::move(out));
}

class Pattern {
 public:
  explicit Pattern(Word letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw precondition_error("pattern must be nonempty");
    for (Letter x : letters_)
      if (x > 2) throw precondition_error("pattern letters must be 1 or 2");
    if (reduce(letters_) != letters_) throw precondition_error("pattern must be reduced");
    two_letters_ = std::find(letters_.begin(), letters_.end(), Letter{2}) != letters_.end();
  }

  static Pattern parse(std::string_view text) {
    std::vector<Letter> out;
    for (char c : text) {
      if (c == '1' || c == '2') {
        out.push_back(static_cast<Letter>(c - '0'));
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw parse_error("pattern must be written over {1,2}", std::string(1, c));
      }
    }
    try {
      return Pattern(Word(std::move(out)));
    } catch (const precondition_error& e) {
      throw parse_error(e.what(), std::string(text));
    }
  }

  static Pattern ones(std::size_t k) { return Pattern(Word(std::vector<Letter>(k, 1))); }

  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const Word& word() const noexcept { return letters_; }
  bool uses_two_letters() const noexcept { return two_letters_; }

  Pattern reversed() const { return Pattern(urep::reverse(letters_)); }
  /// Complement over the pattern's own alphabet: 12 <-> 21, 1^k fixed.
  Pattern complemented() const { return Pattern(complement_word(letters_)); }

  std::string to_string() const {
    std::string s;
    for (Letter x : letters_) s.push_back(static_cast<char>('0' + x));
    return s;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Word letters_;
  bool two_letters_ = false;
};

namespace detail {

// True iff red(factor) == u. `factor.size()` must equal `u.size()`.
inline bool reduces_to(std::span<const Letter> factor, const Pattern& u) {
  const auto [lo, hi] = std::minmax_element(factor.begin(), factor.end());
  if (!u.uses_two_letters()) return *lo == *hi;
  if (*lo == *hi) return false;
  for (std::size_t i = 0; i < factor.size(); ++i) {
    const Letter expected = u[i] == 1 ? *lo : *hi;
    if (factor[i] != expected) return false;
  }
  return true;
}

}  // namespace detail

/// True iff some contiguous factor of `w` reduces to `u`.
inline bool has_match(std::span<const Letter> w, const Pattern& u) {
  const std::size_t len = u.size();
  if (w.size() < len) return false;
  for (std::size_t i = 0; i + len <= w.size(); ++i)
    if (detail::reduces_to(w.subspan(i, len), u)) return true;
  return false;
}

inline bool has_match(const Word& w, const Pattern& u) { return has_match(w.view(), u); }

/// True iff some (not necessarily contiguous) subsequence of `w` reduces to `u`.
inline bool occurs(const Word& w, const Pattern& u) {
  if (!u.uses_two_letters()) {
    std::vector<Letter> sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t run = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
      if (run >= u.size()) return true;
    }
    return false;
  }
  const auto letters = alphabet(w);
  for (auto a = letters.begin(); a != letters.end(); ++a) {
    for (auto b = std::next(a); b != letters.end(); ++b) {
      // Greedy leftmost embedding is optimal for a fixed letter assignment.
      std::size_t matched = 0;
      for (Letter x : w) {
        if (matched == u.size()) break;
        if (x == (u[matched] == 1 ? *a : *b)) ++matched;
      }
      if (matched == u.size()) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Text forms

inline std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(w[i]);
  }
  return s;
}

inline Letter parse_letter(std::string_view token) {
  Letter value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw parse_error("letter is not a decimal integer", std::string(token));
  if (value == 0) throw parse_error("letters must be positive", std::string(token));
  return value;
}

/// Parses the space-separated decimal form. With `allow_compact`, a single
/// separator-free run of digits 1-9 is read one letter per digit.
inline Word parse_word(std::string_view text, bool allow_compact = false) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  std::vector<Letter> out;
  if (allow_compact && tokens.size() == 1 && tokens[0].size() > 1 &&
      std::all_of(tokens[0].begin(), tokens[0].end(), [](char c) { return c >= '1' && c <= '9'; })) {
    for (char c : tokens[0]) out.push_back(static_cast<Letter>(c - '0'));
    return Word(std::move(out));
  }
  for (auto t : tokens) out.push_back(parse_letter(t));
  return Word(std::move(out));
}

}  // namespace urep
