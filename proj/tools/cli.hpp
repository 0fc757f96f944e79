#pragma once

// Command-line front end. `run` takes the arguments after the program name and
// writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success / yes, 1 no / failed construction / word does not
// verify, 2 usage, parse or bound error, 3 unknown (budget or obstruction-only).

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "urep/urep.hpp"

namespace urep::cli {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknown = 3;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// `.g6` files hold graph6 (first non-empty line); anything else is an edge list.
inline LabeledGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  if (ends_with(path, ".g6")) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) return parse_graph6(line);
    throw parse_error("graph6 file has no graph", path);
  }
  return parse_edge_list(text);
}

/// "@path" reads the word from a file, where the compact digit form is allowed.
inline Word load_word(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return parse_word(read_file(arg.substr(1)), true);
  return parse_word(arg, false);
}

inline Representation load_rep(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw parse_error("representation file is not JSON", path);
  }
  return representation_from_json(j);
}

inline std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(' ');
    if (first == std::string::npos) throw parse_error("empty family parameter", text);
    token = token.substr(first);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw parse_error("family parameter is not an integer", token);
    }
    if (used != token.size()) throw parse_error("family parameter is not an integer", token);
    out.push_back(v);
  }
  return out;
}

inline std::string render_graph(const LabeledGraph& g, const std::string& format, const std::set<Label>& highlight = {}) {
  if (format == "g6") return to_graph6(g) + "\n";
  if (format == "dot") return to_dot(g, highlight);
  if (format == "json") return to_json(g).dump(2) + "\n";
  return to_edge_list(g);
}

struct Output {
  std::ostream& out;
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parse_error("cannot write file", path);
    f << text;
  }
};

inline int status_exit(Status s) {
  switch (s) {
    case Status::yes: return kExitYes;
    case Status::no: return kExitNo;
    case Status::unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"u-representation of graphs by words", "urep"};
  app.require_subcommand(1);

  std::string pattern_text = "12", word_text, graph_path, out_path, format, method, intervals_path, family_text,
              params_text;
  std::vector<std::string> rep_paths;
  int k = 0;
  Label x = 0, y = 0, vertex = 0;
  std::uint64_t budget = kDefaultBudget;
  std::size_t jobs = 1, max_n = 5;
  bool labeled = false, obstruction_only = false, tree_mode = false;
  std::string regions_path;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Write the result to a file"); };

  auto* decode_cmd = app.add_subcommand("decode", "Graph represented by a word");
  decode_cmd->add_option("--pattern", pattern_text, "Pattern over {1,2}");
  decode_cmd->add_option("--word", word_text, "Word (space separated, or @file)")->required();
  decode_cmd->add_option("--format", format, "edgelist|json|dot|g6")
      ->check(CLI::IsMember({"edgelist", "json", "dot", "g6"}));
  add_out(decode_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check that a word represents a labeled graph");
  verify_cmd->add_option("--pattern", pattern_text, "Pattern over {1,2}");
  verify_cmd->add_option("--word", word_text, "Word (space separated, or @file)");
  verify_cmd->add_option("--graph", graph_path, "Graph file (.g6 or edge list)");
  verify_cmd->add_option("--rep", rep_paths, "Representation or construction JSON");
  add_out(verify_cmd);

  auto* construct_cmd = app.add_subcommand("construct", "Build a representing word");
  construct_cmd
      ->add_option("--method", method, "perm|1k|cointerval|dcat|corner|skewladder|ladder|glue|copy")
      ->required()
      ->check(CLI::IsMember({"perm", "1k", "cointerval", "dcat", "corner", "skewladder", "ladder", "glue", "copy"}));
  construct_cmd->add_option("--graph", graph_path, "Graph file (.g6 or edge list)");
  construct_cmd->add_option("--k", k, "Family or pattern parameter");
  construct_cmd->add_option("--intervals", intervals_path, "Interval list JSON for cointerval");
  construct_cmd->add_option("--rep", rep_paths, "Representation JSON (glue takes two, copy one)");
  construct_cmd->add_option("--x", x, "glue: vertex of the first graph");
  construct_cmd->add_option("--y", y, "glue: vertex of the second graph");
  construct_cmd->add_option("--vertex", vertex, "copy: vertex to duplicate");
  construct_cmd->add_option("--format", format, "json|word")->check(CLI::IsMember({"json", "word"}));
  add_out(construct_cmd);

  auto* recognize_cmd = app.add_subcommand("recognize", "Decide 12-representability");
  recognize_cmd->add_option("--graph", graph_path, "Graph file (.g6 or edge list)")->required();
  recognize_cmd->add_flag("--labeled", labeled, "Keep the given labels instead of searching labelings");
  recognize_cmd->add_option("--budget", budget, "Word-search nodes per labeling");
  recognize_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  recognize_cmd->add_flag("--obstruction-only", obstruction_only, "Skip the word search (implied above 7 vertices)");
  recognize_cmd->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
  add_out(recognize_cmd);

  auto* obstruct_cmd = app.add_subcommand("obstruct", "Find an obstruction");
  obstruct_cmd->add_option("--graph", graph_path, "Graph file (.g6 or edge list)")->required();
  obstruct_cmd->add_flag("--tree", tree_mode, "Unlabeled tree obstruction");
  obstruct_cmd->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
  add_out(obstruct_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "All class flags with a certificate");
  classify_cmd->add_option("--graph", graph_path, "Graph file (.g6 or edge list)")->required();
  classify_cmd->add_option("--budget", budget, "Word-search nodes per labeling");
  add_out(classify_cmd);

  auto* atlas_cmd = app.add_subcommand("atlas", "Classify every graph up to a size");
  atlas_cmd->add_option("--max-n", max_n, "Largest vertex count");
  atlas_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  atlas_cmd->add_option("--budget", budget, "Word-search nodes per labeling");
  atlas_cmd->add_option("--regions", regions_path, "Also write region counts (CSV)");
  atlas_cmd->add_option("--format", format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));
  add_out(atlas_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a family member");
  gen_cmd->add_option("--family", family_text, "Family name")->required();
  gen_cmd->add_option("--params", params_text, "Comma-separated parameters");
  gen_cmd->add_option("--k", k, "Single parameter (same as --params k)");
  gen_cmd->add_option("--format", format, "edgelist|json|dot|g6")->check(CLI::IsMember({"edgelist", "json", "dot", "g6"}));
  add_out(gen_cmd);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  const detail::Output sink{out, out_path};
  try {
    if (*decode_cmd) {
      const Pattern u = Pattern::parse(pattern_text);
      const LabeledGraph g = decode(detail::load_word(word_text), u);
      sink.emit(detail::render_graph(g, format.empty() ? "edgelist" : format));
      return kExitYes;
    }

    if (*verify_cmd) {
      const Representation rep = [&]() -> Representation {
        if (!rep_paths.empty()) {
          if (rep_paths.size() != 1) throw precondition_error("verify takes one --rep");
          return detail::load_rep(rep_paths[0]);
        }
        if (word_text.empty() || graph_path.empty()) throw precondition_error("verify needs --word and --graph, or --rep");
        return {detail::load_graph(graph_path), Pattern::parse(pattern_text), detail::load_word(word_text)};
      }();
      const bool ok = rep.valid();
      sink.emit(json{{"verifies", ok}, {"pattern", rep.pattern.to_string()}, {"word", to_json(rep.word)}}.dump() + "\n");
      return ok ? kExitYes : kExitNo;
    }

    if (*construct_cmd) {
      ConstructionResult result;
      bool found = true;
      auto need_graph = [&] {
        if (graph_path.empty()) throw precondition_error("--method " + method + " needs --graph");
        return detail::load_graph(graph_path);
      };
      auto on_range = [](const LabeledGraph& g, ConstructionResult& r) {
        std::map<Label, Label> m;
        for (std::size_t i = 0; i < g.size(); ++i) m[g.label(i)] = static_cast<Label>(i + 1);
        for (auto [a, b] : m) r.labeling[std::to_string(a)] = b;
        return relabel(g, m);
      };
      if (method == "perm") {
        const LabeledGraph g = need_graph();
        result.method = "perm";
        result.graph = on_range(g, result);
        auto w = represent_permutation_graph(result.graph);
        found = w.has_value();
        if (found) result.word = *w;
      } else if (method == "1k") {
        if (k < 3) throw precondition_error("--method 1k needs --k >= 3");
        const LabeledGraph g = need_graph();
        result.method = "1k";
        result.pattern = Pattern::ones(static_cast<std::size_t>(k));
        result.graph = on_range(g, result);
        result.word = represent_1k(result.graph, k);
      } else if (method == "cointerval") {
        if (!intervals_path.empty()) {
          json j;
          try {
            j = json::parse(detail::read_file(intervals_path));
          } catch (const json::parse_error&) {
            throw parse_error("intervals file is not JSON", intervals_path);
          }
          result = represent_co_interval(intervals_from_json(j));
        } else {
          const LabeledGraph g = need_graph();
          auto iv = realize_intervals(g);
          found = iv.has_value() && !iv->empty();
          if (found) {
            result = represent_co_interval(*iv);
            std::map<std::string, Label> keyed;
            for (std::size_t i = 0; i < g.size(); ++i) keyed[std::to_string(g.label(i))] = result.labeling.at(std::to_string(i + 1));
            result.labeling = std::move(keyed);
          }
        }
      } else if (method == "dcat") {
        auto r = represent_double_caterpillar(need_graph());
        found = r.has_value();
        if (found) result = *r;
      } else if (method == "corner" || method == "skewladder" || method == "ladder") {
        if (k < 1) throw precondition_error("--method " + method + " needs --k >= 1");
        const Family f = method == "corner" ? Family::corner : method == "ladder" ? Family::ladder : Family::skew_ladder;
        result = construct_strip(f, k);
      } else if (method == "glue") {
        if (rep_paths.size() != 2) throw precondition_error("--method glue needs two --rep files");
        if (x == 0 || y == 0) throw precondition_error("--method glue needs --x and --y");
        auto glued = glue_at(detail::load_rep(rep_paths[0]), x, detail::load_rep(rep_paths[1]), y);
        result.method = "glue";
        result.graph = glued.representation.graph;
        result.word = glued.representation.word;
        for (auto [a, b] : glued.from_g) result.labeling["G:" + std::to_string(a)] = b;
        for (auto [a, b] : glued.from_h) result.labeling["H:" + std::to_string(a)] = b;
      } else if (method == "copy") {
        if (rep_paths.size() != 1) throw precondition_error("--method copy needs one --rep file");
        if (vertex == 0) throw precondition_error("--method copy needs --vertex");
        const Representation rep = detail::load_rep(rep_paths[0]);
        const Representation copied = add_copy_repr(rep, vertex);
        result.method = "copy";
        result.pattern = copied.pattern;
        result.graph = copied.graph;
        result.word = copied.word;
        for (Label l : rep.graph.labels()) result.labeling[std::to_string(l)] = l > vertex ? l + 1 : l;
        result.labeling["copy"] = vertex + 1;
      }
      if (!found) {
        err << "construct: no " << method << " representation for this input\n";
        return kExitNo;
      }
      sink.emit(format == "word" ? to_string(result.word) + "\n" : to_json(result).dump(2) + "\n");
      return kExitYes;
    }

    if (*recognize_cmd) {
      const LabeledGraph g = detail::load_graph(graph_path);
      RecognizeOptions opt;
      opt.budget = budget;
      opt.jobs = jobs;
      opt.obstruction_only = obstruction_only;
      if (!labeled && g.size() > kFullDecisionBound && !opt.obstruction_only) {
        err << "note: " << g.size() << " vertices, using obstruction-only mode\n";
        opt.obstruction_only = true;
      }
      const Certificate cert = labeled ? is_12_representable_labeled(g, opt) : is_12_representable(g, opt);
      if (format == "dot") {
        std::set<Label> hl;
        LabeledGraph shown = cert.obstruction && cert.obstruction->kind == ObstructionKind::GoodComponents
                                 ? g
                                 : (cert.representation ? cert.representation->graph : relabel(g, cert.labeling));
        if (cert.obstruction) {
          hl.insert(cert.obstruction->witness.begin(), cert.obstruction->witness.end());
          hl.insert(cert.obstruction->anchor.begin(), cert.obstruction->anchor.end());
        }
        sink.emit(to_dot(shown, hl));
      } else {
        sink.emit(to_json(cert).dump(2) + "\n");
      }
      return detail::status_exit(cert.status);
    }

    if (*obstruct_cmd) {
      const LabeledGraph g = detail::load_graph(graph_path);
      const auto ob = tree_mode ? find_obstruction_tree(g) : find_obstruction_labeled(g);
      if (format == "dot") {
        std::set<Label> hl;
        if (ob) {
          hl.insert(ob->witness.begin(), ob->witness.end());
          hl.insert(ob->anchor.begin(), ob->anchor.end());
        }
        sink.emit(to_dot(g, hl));
      } else {
        sink.emit((ob ? to_json(*ob) : json(nullptr)).dump(2) + "\n");
      }
      return ob ? kExitYes : kExitNo;
    }

    if (*classify_cmd) {
      const AtlasRecord r = classify(detail::load_graph(graph_path), budget);
      sink.emit(to_json(r).dump(2) + "\n");
      return kExitYes;
    }

    if (*atlas_cmd) {
      const auto atlas = build_atlas(max_n, jobs, budget);
      const std::string csv = region_counts_csv(region_counts(atlas));
      sink.emit(format == "csv" ? csv : atlas_jsonl(atlas));
      if (!regions_path.empty()) detail::Output{out, regions_path}.emit(csv);
      return kExitYes;
    }

    if (*gen_cmd) {
      GraphFamilySpec spec{family_from_name(family_text), {}};
      if (!params_text.empty()) spec.params = detail::parse_params(params_text);
      else if (k != 0) spec.params = {k};
      sink.emit(detail::render_graph(generate(spec), format.empty() ? "edgelist" : format));
      return kExitYes;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bound_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace urep::cli
