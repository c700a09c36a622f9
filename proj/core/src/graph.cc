#include "letternet/graph.h"

#include <stdexcept>
#include <string>

#include "letternet/diagnostics.h"

namespace letternet {

bool is_directed(RelationKind kind) { return kind != RelationKind::COOCCUR; }

EdgeKey canonical_edge(EdgeKey key) {
  if (!is_directed(key.kind) && key.target < key.source) std::swap(key.source, key.target);
  return key;
}

EdgeKey edge_key(const RelationRecord& record) {
  switch (record.kind) {
    case RelationKind::SUBJ: return {record.a, record.b, RelationKind::SUBJ};
    case RelationKind::OBJ: return {record.b, record.a, RelationKind::OBJ};
    case RelationKind::COOCCUR: break;
  }
  return canonical_edge({record.a, record.b, RelationKind::COOCCUR});
}

void LexicalGraph::add_node(const LexKey& node, std::uint64_t frequency) {
  if (frequency == 0) throw std::invalid_argument("node frequency must be positive");
  nodes_[node] += frequency;
}

void LexicalGraph::add_edge(const EdgeKey& edge, std::uint64_t weight) {
  if (weight == 0) throw std::invalid_argument("edge weight must be positive");
  if (!contains(edge.source) || !contains(edge.target)) {
    throw std::invalid_argument("edge endpoint '" + edge.source.lemma + "' or '" +
                                edge.target.lemma + "' is not a node");
  }
  edges_[canonical_edge(edge)] += weight;
}

std::optional<std::uint64_t> LexicalGraph::frequency(const LexKey& node) const {
  auto it = nodes_.find(node);
  if (it == nodes_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint64_t> LexicalGraph::weight(const EdgeKey& edge) const {
  auto it = edges_.find(canonical_edge(edge));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t LexicalGraph::total_edge_weight() const {
  std::uint64_t total = 0;
  for (const auto& [key, w] : edges_) total += w;
  return total;
}

bool LexicalGraph::is_subgraph_of(const LexicalGraph& other) const {
  for (const auto& [node, f] : nodes_) {
    if (other.frequency(node) != f) return false;
  }
  for (const auto& [edge, w] : edges_) {
    if (other.weight(edge) != w) return false;
  }
  return true;
}

LexicalGraph build_graph(std::span<const RelationRecord> records,
                         std::span<const AnnotatedDoc> freq_source) {
  LexicalGraph graph;
  if (records.empty()) return graph;

  std::map<LexKey, std::uint64_t> counts;
  for (const AnnotatedDoc& doc : freq_source) {
    for (const Sentence& sentence : doc.sentences) {
      for (const Token& t : sentence) ++counts[LexKey{t.lemma, t.pos}];
    }
  }
  auto add = [&](const LexKey& node) {
    if (graph.contains(node)) return;
    auto it = counts.find(node);
    if (it == counts.end()) {
      throw Error("lemma '" + node.lemma + "' (" + std::string(pos_label(node.pos)) +
                  ") does not occur in the frequency source");
    }
    graph.add_node(node, it->second);
  };
  for (const RelationRecord& r : records) {
    add(r.a);
    add(r.b);
    graph.add_edge(edge_key(r), 1);
  }
  return graph;
}

LexicalGraph merge_graphs(std::span<const LexicalGraph> graphs) {
  LexicalGraph merged;
  for (const LexicalGraph& g : graphs) {
    for (const auto& [node, f] : g.nodes()) merged.add_node(node, f);
  }
  for (const LexicalGraph& g : graphs) {
    for (const auto& [edge, w] : g.edges()) merged.add_edge(edge, w);
  }
  return merged;
}

}  // namespace letternet
