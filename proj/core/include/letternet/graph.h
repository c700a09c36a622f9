#ifndef LETTERNET_GRAPH_H_
#define LETTERNET_GRAPH_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "letternet/extraction.h"
#include "letternet/pipeline.h"

namespace letternet {

// COOCCUR is undirected; SUBJ points noun -> verb and OBJ verb -> noun.
bool is_directed(RelationKind kind);

struct EdgeKey {
  LexKey source;
  LexKey target;
  RelationKind kind = RelationKind::COOCCUR;

  auto operator<=>(const EdgeKey&) const = default;
};

// Undirected keys are stored with source <= target.
EdgeKey canonical_edge(EdgeKey key);
EdgeKey edge_key(const RelationRecord& record);

// Weighted typed lexical network. Node values are corpus frequencies, edge
// values the number of supporting records; both are >= 1 and every edge
// endpoint is a node.
class LexicalGraph {
 public:
  using NodeMap = std::map<LexKey, std::uint64_t>;
  using EdgeMap = std::map<EdgeKey, std::uint64_t>;

  // Adds to the frequency of `node` (inserting it). Throws
  // std::invalid_argument for a zero count.
  void add_node(const LexKey& node, std::uint64_t frequency);
  // Adds to the weight of the canonicalised edge. Throws
  // std::invalid_argument for a zero weight or a missing endpoint.
  void add_edge(const EdgeKey& edge, std::uint64_t weight);

  std::optional<std::uint64_t> frequency(const LexKey& node) const;
  std::optional<std::uint64_t> weight(const EdgeKey& edge) const;
  bool contains(const LexKey& node) const { return nodes_.contains(node); }

  const NodeMap& nodes() const { return nodes_; }
  const EdgeMap& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }
  std::uint64_t total_edge_weight() const;

  // True when every node and edge of this graph is in `other` with the same
  // value.
  bool is_subgraph_of(const LexicalGraph& other) const;

  bool operator==(const LexicalGraph&) const = default;

 private:
  NodeMap nodes_;
  EdgeMap edges_;
};

// Nodes are the lemmas mentioned by `records`, with their occurrence counts
// in `freq_source`; edges aggregate records by key. Throws Error naming the
// lemma when a record mentions a (lemma, class) absent from `freq_source`.
LexicalGraph build_graph(std::span<const RelationRecord> records,
                         std::span<const AnnotatedDoc> freq_source);

// Sums frequencies and weights key by key.
LexicalGraph merge_graphs(std::span<const LexicalGraph> graphs);

}  // namespace letternet

#endif  // LETTERNET_GRAPH_H_
