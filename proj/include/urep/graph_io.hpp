#pragma once

// Text formats for graphs.
//
// Edge list:
//     n=<count>
//     [labels=<l1> <l2> ...]     only when the labels are not {1..n}
//     <u> <v>                    one edge per line
// Blank lines and lines starting with '#' are ignored.
//
// graph6: the standard format (vertices 0..n-1 read as labels 1..n). Upper
// triangle bits in column order, six bits per byte offset by 63.
//
// DOT: undirected graph; highlighted vertices are filled.

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "urep/error.hpp"
#include "urep/graph.hpp"

namespace urep {

inline std::string to_edge_list(const LabeledGraph& g) {
  std::ostringstream os;
  os << "n=" << g.size() << "\n";
  if (!g.on_range()) {
    os << "labels=";
    for (std::size_t i = 0; i < g.size(); ++i) os << (i ? " " : "") << g.label(i);
    os << "\n";
  }
  for (auto [x, y] : g.edges()) os << x << " " << y << "\n";
  return os.str();
}

inline LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Label> labels;
  std::vector<Edge> edges;
  auto tokens_of = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream ls(s);
    for (std::string t; ls >> t;) out.push_back(t);
    return out;
  };
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string body = line.substr(first);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.pop_back();
    if (!n) {
      if (body.rfind("n=", 0) != 0) throw parse_error("edge list must start with 'n=<count>'", body);
      const std::string count = body.substr(2);
      if (count.empty() || !std::all_of(count.begin(), count.end(), ::isdigit))
        throw parse_error("vertex count is not a number", count);
      n = std::stoul(count);
      continue;
    }
    if (body.rfind("labels=", 0) == 0) {
      for (const auto& t : tokens_of(body.substr(7))) labels.push_back(parse_letter(t));
      continue;
    }
    auto t = tokens_of(body);
    if (t.size() != 2) throw parse_error("edge line must hold two labels", body);
    edges.emplace_back(parse_letter(t[0]), parse_letter(t[1]));
  }
  if (!n) throw parse_error("missing 'n=<count>' header", std::string(text.substr(0, 20)));
  if (labels.empty()) {
    for (std::size_t i = 1; i <= *n; ++i) labels.push_back(static_cast<Label>(i));
  } else if (labels.size() != *n) {
    throw parse_error("labels= line does not list n labels", std::to_string(labels.size()));
  }
  LabeledGraph g(labels);
  for (auto [x, y] : edges) {
    if (!g.contains(x)) throw parse_error("edge endpoint is not a vertex", std::to_string(x));
    if (!g.contains(y)) throw parse_error("edge endpoint is not a vertex", std::to_string(y));
    if (x == y) throw parse_error("loops are not allowed", std::to_string(x));
    g.add_edge(x, y);
  }
  return g;
}

inline std::string to_graph6(const LabeledGraph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw bound_error("graph6 writer supports at most 258047 vertices");
  }
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline LabeledGraph parse_graph6(std::string_view text) {
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw parse_error("empty graph6 string", "");
  for (char c : text)
    if (c < 63 || c > 126) throw parse_error("graph6 byte out of range", std::string(1, c));
  std::size_t pos = 0, n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw parse_error("unsupported graph6 size header", std::string(text.substr(0, 4)));
    for (int k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    pos = 4;
  }
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw parse_error("graph6 body has wrong length for n=" + std::to_string(n), std::string(text));
  LabeledGraph g = LabeledGraph::on_range(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.set_adjacent(i, j, true);
    }
  return g;
}

inline std::string to_dot(const LabeledGraph& g, const std::set<Label>& highlight = {}, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Label x : g.labels()) {
    os << "  " << x;
    if (highlight.contains(x)) os << " [style=filled, fillcolor=tomato]";
    os << ";\n";
  }
  for (auto [x, y] : g.edges()) {
    os << "  " << x << " -- " << y;
    if (highlight.contains(x) && highlight.contains(y)) os << " [color=tomato, penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace urep
