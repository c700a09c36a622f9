#ifndef LETTERNET_EXPORT_H_
#define LETTERNET_EXPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <string_view>

#include "letternet/graph.h"
#include "letternet/pos.h"

namespace letternet {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  // "#RRGGBB" (case-insensitive); throws Error otherwise.
  static Rgb parse(std::string_view hex);
  std::string hex() const;  // upper case, with '#'
  bool operator==(const Rgb&) const = default;
};

// Visual conventions: verbs red, nouns blue, adjectives green; SUBJ edges
// red, OBJ edges blue. Node size grows linearly with frequency between
// size_min (least frequent node) and size_max (most frequent).
struct StyleSpec {
  std::map<PosClass, Rgb> node_colors = {
      {PosClass::VERB, {0xFF, 0x00, 0x00}},
      {PosClass::NOUN, {0x00, 0x00, 0xFF}},
      {PosClass::ADJ, {0x00, 0xFF, 0x00}},
  };
  Rgb default_node_color = {0x99, 0x99, 0x99};
  std::map<RelationKind, Rgb> edge_colors = {
      {RelationKind::SUBJ, {0xFF, 0x00, 0x00}},
      {RelationKind::OBJ, {0x00, 0x00, 0xFF}},
      {RelationKind::COOCCUR, {0x88, 0x88, 0x88}},
  };
  double size_min = 10.0;
  double size_max = 60.0;

  // Throws Error unless size_max > size_min > 0.
  void validate() const;
  Rgb node_color(PosClass pos) const;
  Rgb edge_color(RelationKind kind) const;
  // Linear in frequency, clamped to [size_min, size_max]; size_min when all
  // frequencies are equal.
  double node_size(std::uint64_t freq, std::uint64_t freq_min, std::uint64_t freq_max) const;
};

// GEXF 1.2 with viz colours and sizes. Nodes are emitted in key order with
// ids n0, n1, ...; edges in key order as e0, e1, ...; each edge declares its
// own type. No timestamps, so equal graphs give identical bytes.
void write_gexf(std::ostream& out, const LexicalGraph& graph, const StyleSpec& style = {});
void write_dot(std::ostream& out, const LexicalGraph& graph, const StyleSpec& style = {});
// Header "src,src_pos,dst,dst_pos,kind,weight", RFC 4180 quoting.
void write_csv_edges(std::ostream& out, const LexicalGraph& graph);

nlohmann::json graph_to_json(const LexicalGraph& graph);
// Inverse of graph_to_json. Throws Error on a malformed document.
LexicalGraph graph_from_json(const nlohmann::json& doc);
std::string to_json_text(const LexicalGraph& graph);

// File variants; written atomically, Error on failure.
void export_gexf(const LexicalGraph& graph, const StyleSpec& style,
                 const std::filesystem::path& path);
void export_dot(const LexicalGraph& graph, const StyleSpec& style,
                const std::filesystem::path& path);
void export_json(const LexicalGraph& graph, const std::filesystem::path& path);
void export_csv_edges(const LexicalGraph& graph, const std::filesystem::path& path);
LexicalGraph import_json(const std::filesystem::path& path);

// Plain-text summary: counts per class and kind, frequency and weight
// distributions, top-N nodes by frequency (overall and for nouns, verbs,
// adjectives) and by each centrality measure.
std::string stats_report(const LexicalGraph& graph, std::size_t top_n = 10);

}  // namespace letternet

#endif  // LETTERNET_EXPORT_H_
