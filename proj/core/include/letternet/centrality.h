#ifndef LETTERNET_CENTRALITY_H_
#define LETTERNET_CENTRALITY_H_

#include <optional>
#include <string_view>
#include <vector>

#include "letternet/graph.h"

namespace letternet {

enum class CentralityMeasure { DEGREE, IN_DEGREE, OUT_DEGREE, WEIGHTED_DEGREE };

std::string_view measure_label(CentralityMeasure measure);

struct RankedNode {
  LexKey node;
  double score = 0.0;

  bool operator==(const RankedNode&) const = default;
};

// Degree-based scores for every node, best first; ties ordered by lemma and
// then class.
//   DEGREE           incident edges (a self-loop counts twice)
//   IN/OUT_DEGREE    directed edges ending/starting at the node; undirected
//                    edges count toward both
//   WEIGHTED_DEGREE  sum of incident edge weights (a self-loop twice)
std::vector<RankedNode> centrality(const LexicalGraph& graph, CentralityMeasure measure);

}  // namespace letternet

#endif  // LETTERNET_CENTRALITY_H_
