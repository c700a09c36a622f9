#include "letternet/centrality.h"

#include <algorithm>
#include <map>

namespace letternet {

std::string_view measure_label(CentralityMeasure measure) {
  switch (measure) {
    case CentralityMeasure::DEGREE: return "degree";
    case CentralityMeasure::IN_DEGREE: return "in_degree";
    case CentralityMeasure::OUT_DEGREE: return "out_degree";
    case CentralityMeasure::WEIGHTED_DEGREE: return "weighted_degree";
  }
  return "degree";
}

std::vector<RankedNode> centrality(const LexicalGraph& graph, CentralityMeasure measure) {
  std::map<LexKey, double> score;
  for (const auto& [node, f] : graph.nodes()) score[node] = 0.0;

  for (const auto& [edge, w] : graph.edges()) {
    const bool directed = is_directed(edge.kind);
    switch (measure) {
      case CentralityMeasure::DEGREE:
        score[edge.source] += 1.0;
        score[edge.target] += 1.0;
        break;
      case CentralityMeasure::WEIGHTED_DEGREE:
        score[edge.source] += static_cast<double>(w);
        score[edge.target] += static_cast<double>(w);
        break;
      case CentralityMeasure::IN_DEGREE:
        score[edge.target] += 1.0;
        if (!directed) score[edge.source] += 1.0;
        break;
      case CentralityMeasure::OUT_DEGREE:
        score[edge.source] += 1.0;
        if (!directed) score[edge.target] += 1.0;
        break;
    }
  }

  std::vector<RankedNode> ranked;
  ranked.reserve(score.size());
  for (auto& [node, s] : score) ranked.push_back({node, s});
  std::stable_sort(ranked.begin(), ranked.end(), [](const RankedNode& x, const RankedNode& y) {
    if (x.score != y.score) return x.score > y.score;
    return x.node < y.node;
  });
  return ranked;
}

}  // namespace letternet
