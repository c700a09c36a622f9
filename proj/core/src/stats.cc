#include <algorithm>
#include <vector>

#include <fmt/format.h>

#include "letternet/centrality.h"
#include "letternet/export.h"
#include "letternet/prune.h"

namespace letternet {

namespace {

void append_summary(std::string& out, std::string_view title,
                    std::span<const std::uint64_t> values) {
  const DistributionSummary s = summarize(values);
  out += fmt::format("{}: count {} min {} max {} mean {:.4f} sd {:.4f}\n", title, s.count, s.min,
                     s.max, s.mean, s.sd);
}

void append_top_frequency(std::string& out, const LexicalGraph& graph, std::string_view title,
                          std::optional<PosClass> only, std::size_t top_n) {
  std::vector<std::pair<LexKey, std::uint64_t>> rows;
  for (const auto& [node, f] : graph.nodes()) {
    if (!only || node.pos == *only) rows.emplace_back(node, f);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  if (rows.size() > top_n) rows.resize(top_n);
  out += fmt::format("\n{}:\n", title);
  std::size_t rank = 0;
  for (const auto& [node, f] : rows) {
    out += fmt::format("  {:>2}. {}\t{}\t{}\n", ++rank, node.lemma, pos_label(node.pos), f);
  }
}

}  // namespace

std::string stats_report(const LexicalGraph& graph, std::size_t top_n) {
  std::string out;
  out += fmt::format("nodes: {}\nedges: {}\ntotal edge weight: {}\n", graph.node_count(),
                     graph.edge_count(), graph.total_edge_weight());

  std::map<PosClass, std::size_t> by_class;
  std::vector<std::uint64_t> freqs;
  for (const auto& [node, f] : graph.nodes()) {
    ++by_class[node.pos];
    freqs.push_back(f);
  }
  std::map<RelationKind, std::size_t> by_kind;
  std::vector<std::uint64_t> weights;
  for (const auto& [edge, w] : graph.edges()) {
    ++by_kind[edge.kind];
    weights.push_back(w);
  }

  out += "\nnodes by class:\n";
  for (PosClass pos : kAllPosClasses) {
    if (by_class.contains(pos)) out += fmt::format("  {}\t{}\n", pos_label(pos), by_class[pos]);
  }
  out += "\nedges by kind:\n";
  for (RelationKind kind : {RelationKind::COOCCUR, RelationKind::SUBJ, RelationKind::OBJ}) {
    out += fmt::format("  {}\t{}\n", kind_label(kind), by_kind[kind]);
  }

  out += "\n";
  append_summary(out, "node frequency", freqs);
  append_summary(out, "edge weight", weights);

  append_top_frequency(out, graph, "top nodes by frequency", std::nullopt, top_n);
  append_top_frequency(out, graph, "top nouns by frequency", PosClass::NOUN, top_n);
  append_top_frequency(out, graph, "top verbs by frequency", PosClass::VERB, top_n);
  append_top_frequency(out, graph, "top adjectives by frequency", PosClass::ADJ, top_n);

  for (CentralityMeasure m : {CentralityMeasure::DEGREE, CentralityMeasure::IN_DEGREE,
                              CentralityMeasure::OUT_DEGREE, CentralityMeasure::WEIGHTED_DEGREE}) {
    std::vector<RankedNode> ranked = centrality(graph, m);
    if (ranked.size() > top_n) ranked.resize(top_n);
    out += fmt::format("\ntop nodes by {}:\n", measure_label(m));
    std::size_t rank = 0;
    for (const RankedNode& r : ranked) {
      out += fmt::format("  {:>2}. {}\t{}\t{}\n", ++rank, r.node.lemma, pos_label(r.node.pos),
                         r.score);
    }
  }
  return out;
}

}  // namespace letternet
