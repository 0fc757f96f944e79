#pragma once

// Classification of all small graphs against the hierarchy
//   permutation, co-interval  =>  12-representable  =>  comparability.

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "urep/canonical.hpp"
#include "urep/classes.hpp"
#include "urep/error.hpp"
#include "urep/graph.hpp"
#include "urep/obstruction.hpp"
#include "urep/recognize.hpp"
#include "urep/represent.hpp"

namespace urep {

struct AtlasFlags {
  Status repr12 = Status::unknown;
  bool comparability = false;
  bool permutation = false;
  bool interval = false;
  bool co_interval = false;
  bool chordal = false;
  bool occ11 = false;
  bool tree = false;
  bool double_caterpillar = false;
  friend bool operator==(const AtlasFlags&, const AtlasFlags&) = default;
};

struct AtlasRecord {
  std::size_t n = 0;
  CanonicalCode code;
  LabeledGraph graph;  // canonical representative on {1..n}
  AtlasFlags flags;
  Certificate certificate;
};

/// All flags for `g`; the 12-representability decision runs single-threaded.
/// Full decision up to 7 vertices, obstruction-only above.
inline AtlasRecord classify(const LabeledGraph& g, std::uint64_t budget = kDefaultBudget) {
  if (g.size() > kClassBound)
    throw bound_error("classify: " + std::to_string(g.size()) + " vertices exceeds bound " + std::to_string(kClassBound));
  AtlasRecord r;
  r.n = g.size();
  if (r.n <= kCanonicalBound) {
    r.code = canonical_form(g);
    r.graph = graph_from_code(r.code);
  } else {
    r.code = CanonicalCode{r.n, 0};
    r.graph = reduce_graph(g);
  }
  RecognizeOptions opt;
  opt.budget = budget;
  opt.obstruction_only = r.n > kFullDecisionBound;
  r.certificate = is_12_representable(r.graph, opt);
  auto& f = r.flags;
  f.repr12 = r.certificate.status;
  f.comparability = is_comparability(r.graph).transitive;
  const bool co_comparability = is_comparability(complement_graph(r.graph)).transitive;
  f.permutation = f.comparability && co_comparability;
  f.chordal = is_chordal(r.graph);
  f.interval = f.chordal && co_comparability;
  f.co_interval = is_interval(complement_graph(r.graph));
  f.occ11 = is_11_occurrence_representable(r.graph);
  f.tree = r.n > 0 && is_tree(r.graph);
  f.double_caterpillar = f.tree && is_double_caterpillar(r.graph).is_double_caterpillar;
  return r;
}

/// Invariant violations of one record (empty when consistent).
inline std::vector<std::string> check_record(const AtlasRecord& r) {
  std::vector<std::string> bad;
  const auto& f = r.flags;
  const auto& c = r.certificate;
  if (f.repr12 == Status::no && f.permutation) bad.push_back("permutation graph refuted");
  if (f.repr12 == Status::no && f.co_interval) bad.push_back("co-interval graph refuted");
  if (f.repr12 == Status::yes && !f.comparability) bad.push_back("12-representable but not comparability");
  if (f.permutation && !f.comparability) bad.push_back("permutation but not comparability");
  if (f.interval && !f.chordal) bad.push_back("interval but not chordal");
  if (f.double_caterpillar && !f.tree) bad.push_back("double caterpillar but not a tree");
  if (c.status == Status::yes) {
    if (!c.representation || !c.representation->valid()) bad.push_back("yes without a verifying word");
    else if (!(reduce_graph(c.representation->graph) == relabel(r.graph, c.labeling)))
      bad.push_back("representation is not a labeling of the graph");
    else if (!orient_by_labels(c.representation->graph).transitive)
      bad.push_back("label orientation of the representation is not transitive");
  }
  if (c.status == Status::no) {
    if (c.obstruction) {
      const LabeledGraph target = c.obstruction->kind == ObstructionKind::GoodComponents
                                      ? r.graph
                                      : relabel(r.graph, c.labeling);
      if (!recheck(target, *c.obstruction)) bad.push_back("obstruction witness does not re-check");
    } else if (!c.exhausted) {
      bad.push_back("no without obstruction or exhausted search");
    }
  }
  return bad;
}

/// One record per isomorphism class with 1..max_n vertices, ordered by
/// (n, canonical code). Records are computed in parallel and placed by index,
/// so the result does not depend on `jobs`.
inline std::vector<AtlasRecord> build_atlas(std::size_t max_n, std::size_t jobs = 1,
                                            std::uint64_t budget = kDefaultBudget) {
  if (max_n > kCanonicalBound)
    throw bound_error("build_atlas: max_n = " + std::to_string(max_n) + " exceeds bound " +
                      std::to_string(kCanonicalBound));
  std::vector<LabeledGraph> graphs;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : enumerate_graphs(n)) graphs.push_back(std::move(g));
  std::vector<AtlasRecord> records(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < graphs.size();) records[i] = classify(graphs[i], budget);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, graphs.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return records;
}

/// Region of the hierarchy a record falls in.
struct RegionKey {
  std::size_t n;
  Status repr12;
  bool comparability, permutation, co_interval;
  friend auto operator<=>(const RegionKey&, const RegionKey&) = default;
};

inline std::map<RegionKey, std::size_t> region_counts(const std::vector<AtlasRecord>& atlas) {
  std::map<RegionKey, std::size_t> out;
  for (const auto& r : atlas)
    ++out[{r.n, r.flags.repr12, r.flags.comparability, r.flags.permutation, r.flags.co_interval}];
  return out;
}

inline std::string region_counts_csv(const std::map<RegionKey, std::size_t>& counts) {
  std::ostringstream os;
  os << "n,repr12,comparability,permutation,co_interval,count\n";
  for (const auto& [k, c] : counts)
    os << k.n << "," << status_name(k.repr12) << "," << k.comparability << "," << k.permutation << ","
       << k.co_interval << "," << c << "\n";
  return os.str();
}

}  // namespace urep
