#pragma once

// JSON encodings (nlohmann::json).
//
//   Representation      {"pattern", "labels", "edges", "word"}
//   ConstructionResult  Representation + {"method", "labeling"}
//   Certificate         {"status", "labeling", "word", "obstruction", "exhausted", "budget_hit", "stats"}
//   AtlasRecord         {"n", "code", "graph6", "flags", "certificate"}

#include <string>
#include <vector>

#include <json.hpp>

#include "urep/atlas.hpp"
#include "urep/construct.hpp"
#include "urep/graph_io.hpp"
#include "urep/obstruction.hpp"
#include "urep/recognize.hpp"
#include "urep/represent.hpp"

namespace urep {

using json = nlohmann::json;

inline json to_json(const Word& w) {
  json a = json::array();
  for (Letter x : w) a.push_back(x);
  return a;
}

inline json to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (auto [x, y] : g.edges()) edges.push_back({x, y});
  return {{"labels", g.labels()}, {"edges", edges}};
}

inline json to_json(const Representation& r) {
  json j = to_json(r.graph);
  j["pattern"] = r.pattern.to_string();
  j["word"] = to_json(r.word);
  return j;
}

inline json to_json(const ConstructionResult& c) {
  json j = to_json(c.representation());
  j["method"] = c.method;
  j["labeling"] = c.labeling;
  return j;
}

inline json labeling_json(const std::map<Label, Label>& m) {
  json j = json::object();
  for (auto [a, b] : m) j[std::to_string(a)] = b;
  return j;
}

inline json to_json(const Obstruction& ob) {
  json j{{"kind", kind_name(ob.kind)}, {"witness", ob.witness}};
  if (ob.kind == ObstructionKind::CutsetOrder) {
    j["cutset"] = ob.anchor;
    j["split"] = ob.split;
  }
  if (ob.kind == ObstructionKind::GoodComponents) j["center"] = ob.anchor.at(0);
  return j;
}

inline Obstruction obstruction_from_json(const json& j) {
  Obstruction ob{kind_from_name(j.at("kind").get<std::string>()), j.at("witness").get<std::vector<Label>>(), {}, 0};
  if (j.contains("cutset")) ob.anchor = j["cutset"].get<std::vector<Label>>();
  if (j.contains("split")) ob.split = j["split"].get<std::size_t>();
  if (j.contains("center")) ob.anchor = {j["center"].get<Label>()};
  return ob;
}

inline json to_json(const SearchStats& s) {
  return {{"nodes", s.nodes}, {"labelings_pruned", s.labelings_pruned}, {"labelings_searched", s.labelings_searched}};
}

inline json to_json(const Certificate& c) {
  json j;
  j["status"] = status_name(c.status);
  j["labeling"] = labeling_json(c.labeling);
  j["word"] = c.representation ? to_json(c.representation->word) : json(nullptr);
  j["obstruction"] = c.obstruction ? to_json(*c.obstruction) : json(nullptr);
  j["exhausted"] = c.exhausted;
  j["budget_hit"] = c.budget_hit;
  j["stats"] = to_json(c.stats);
  return j;
}

inline json to_json(const AtlasFlags& f) {
  return {{"repr12", status_name(f.repr12)},
          {"comparability", f.comparability},
          {"permutation", f.permutation},
          {"interval", f.interval},
          {"co_interval", f.co_interval},
          {"chordal", f.chordal},
          {"occ11", f.occ11},
          {"tree", f.tree},
          {"double_caterpillar", f.double_caterpillar}};
}

inline json to_json(const AtlasRecord& r) {
  return {{"n", r.n},
          {"code", r.code.to_string()},
          {"graph6", to_graph6(r.graph)},
          {"flags", to_json(r.flags)},
          {"certificate", to_json(r.certificate)}};
}

/// One compact JSON object per line.
inline std::string atlas_jsonl(const std::vector<AtlasRecord>& atlas) {
  std::string out;
  for (const auto& r : atlas) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

inline Representation representation_from_json(const json& j) {
  Pattern p = Pattern::parse(j.at("pattern").get<std::string>());
  Word w(j.at("word").get<std::vector<Letter>>());
  LabeledGraph g(j.at("labels").get<std::vector<Label>>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<Label>(), e.at(1).get<Label>());
  return {std::move(g), std::move(p), std::move(w)};
}

/// Accepts [[l, r], ...] or {"intervals": [[l, r], ...]}.
inline std::vector<Interval> intervals_from_json(const json& j) {
  const json& list = j.is_object() ? j.at("intervals") : j;
  if (!list.is_array()) throw parse_error("intervals must be a JSON array", list.dump());
  std::vector<Interval> out;
  for (const auto& item : list) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw parse_error("interval must be a pair of numbers", item.dump());
    out.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return out;
}

}  // namespace urep
