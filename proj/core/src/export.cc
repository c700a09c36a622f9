#include "letternet/export.h"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>

#include "letternet/diagnostics.h"
#include "letternet/io.h"
#include "letternet/text.h"

namespace letternet {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string node_name(const LexKey& key) {
  return key.lemma + "/" + std::string(pos_label(key.pos));
}

std::pair<std::uint64_t, std::uint64_t> freq_range(const LexicalGraph& graph) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool first = true;
  for (const auto& [node, f] : graph.nodes()) {
    if (first || f < lo) lo = f;
    if (first || f > hi) hi = f;
    first = false;
  }
  return {lo, hi};
}

std::string number(double v) { return fmt::format("{}", v); }

template <typename Writer>
void export_to(const std::filesystem::path& path, Writer&& writer) {
  std::ostringstream out;
  writer(out);
  io::write_file_atomic(path, out.str());
}

}  // namespace

Rgb Rgb::parse(std::string_view hex) {
  if (hex.size() != 7 || hex[0] != '#') throw Error("bad colour '" + std::string(hex) + "'");
  std::uint8_t parts[3];
  for (int i = 0; i < 3; ++i) {
    const int hi = hex_digit(hex[1 + 2 * i]);
    const int lo = hex_digit(hex[2 + 2 * i]);
    if (hi < 0 || lo < 0) throw Error("bad colour '" + std::string(hex) + "'");
    parts[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return {parts[0], parts[1], parts[2]};
}

std::string Rgb::hex() const { return fmt::format("#{:02X}{:02X}{:02X}", r, g, b); }

void StyleSpec::validate() const {
  if (!(size_min > 0.0) || !(size_max > size_min)) {
    throw Error(fmt::format("node sizes must satisfy size_max > size_min > 0 (got {} and {})",
                            size_min, size_max));
  }
}

Rgb StyleSpec::node_color(PosClass pos) const {
  auto it = node_colors.find(pos);
  return it == node_colors.end() ? default_node_color : it->second;
}

Rgb StyleSpec::edge_color(RelationKind kind) const {
  auto it = edge_colors.find(kind);
  return it == edge_colors.end() ? Rgb{0x88, 0x88, 0x88} : it->second;
}

double StyleSpec::node_size(std::uint64_t freq, std::uint64_t freq_min,
                            std::uint64_t freq_max) const {
  if (freq_max <= freq_min) return size_min;
  const double t = (static_cast<double>(freq) - static_cast<double>(freq_min)) /
                   (static_cast<double>(freq_max) - static_cast<double>(freq_min));
  return std::clamp(size_min + (size_max - size_min) * t, size_min, size_max);
}

void write_gexf(std::ostream& out, const LexicalGraph& graph, const StyleSpec& style) {
  style.validate();
  const auto [lo, hi] = freq_range(graph);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" "
         "xmlns:viz=\"http://www.gexf.net/1.2draft/viz\" version=\"1.2\">\n"
      << "  <meta>\n    <creator>letternet</creator>\n  </meta>\n"
      << "  <graph mode=\"static\" defaultedgetype=\"directed\">\n"
      << "    <attributes class=\"node\">\n"
      << "      <attribute id=\"pos\" title=\"pos\" type=\"string\"/>\n"
      << "      <attribute id=\"frequency\" title=\"frequency\" type=\"long\"/>\n"
      << "    </attributes>\n"
      << "    <attributes class=\"edge\">\n"
      << "      <attribute id=\"kind\" title=\"kind\" type=\"string\"/>\n"
      << "    </attributes>\n";

  std::map<LexKey, std::string> ids;
  out << "    <nodes>\n";
  for (const auto& [node, f] : graph.nodes()) {
    const std::string id = "n" + std::to_string(ids.size());
    ids.emplace(node, id);
    const Rgb c = style.node_color(node.pos);
    out << "      <node id=\"" << id << "\" label=\"" << xml_escape(node.lemma) << "\">\n"
        << "        <attvalues>\n"
        << "          <attvalue for=\"pos\" value=\"" << pos_label(node.pos) << "\"/>\n"
        << "          <attvalue for=\"frequency\" value=\"" << f << "\"/>\n"
        << "        </attvalues>\n"
        << "        <viz:color r=\"" << int{c.r} << "\" g=\"" << int{c.g} << "\" b=\"" << int{c.b}
        << "\"/>\n"
        << "        <viz:size value=\"" << number(style.node_size(f, lo, hi)) << "\"/>\n"
        << "      </node>\n";
  }
  out << "    </nodes>\n    <edges>\n";
  std::size_t next = 0;
  for (const auto& [edge, w] : graph.edges()) {
    const Rgb c = style.edge_color(edge.kind);
    out << "      <edge id=\"e" << next++ << "\" source=\"" << ids.at(edge.source)
        << "\" target=\"" << ids.at(edge.target) << "\" label=\"" << kind_label(edge.kind)
        << "\" type=\"" << (is_directed(edge.kind) ? "directed" : "undirected")
        << "\" weight=\"" << w << "\">\n"
        << "        <attvalues>\n"
        << "          <attvalue for=\"kind\" value=\"" << kind_label(edge.kind) << "\"/>\n"
        << "        </attvalues>\n"
        << "        <viz:color r=\"" << int{c.r} << "\" g=\"" << int{c.g} << "\" b=\"" << int{c.b}
        << "\"/>\n"
        << "      </edge>\n";
  }
  out << "    </edges>\n  </graph>\n</gexf>\n";
}

void write_dot(std::ostream& out, const LexicalGraph& graph, const StyleSpec& style) {
  style.validate();
  const auto [lo, hi] = freq_range(graph);
  std::uint64_t wmin = 0;
  std::uint64_t wmax = 0;
  bool first = true;
  for (const auto& [edge, w] : graph.edges()) {
    if (first || w < wmin) wmin = w;
    if (first || w > wmax) wmax = w;
    first = false;
  }

  out << "digraph letternet {\n";
  for (const auto& [node, f] : graph.nodes()) {
    out << "  " << dot_quote(node_name(node)) << " [label=" << dot_quote(node.lemma)
        << ", color=\"" << style.node_color(node.pos).hex()
        << "\", width=" << number(style.node_size(f, lo, hi) / style.size_max)
        << ", frequency=" << f << "];\n";
  }
  for (const auto& [edge, w] : graph.edges()) {
    const double pen =
        wmax > wmin ? 1.0 + 4.0 * static_cast<double>(w - wmin) / static_cast<double>(wmax - wmin)
                    : 1.0;
    out << "  " << dot_quote(node_name(edge.source)) << " -> " << dot_quote(node_name(edge.target))
        << " [label=\"" << kind_label(edge.kind) << "\", color=\""
        << style.edge_color(edge.kind).hex() << "\", penwidth=" << number(pen)
        << ", weight=" << w;
    if (!is_directed(edge.kind)) out << ", dir=none";
    out << "];\n";
  }
  out << "}\n";
}

void write_csv_edges(std::ostream& out, const LexicalGraph& graph) {
  out << "src,src_pos,dst,dst_pos,kind,weight\r\n";
  for (const auto& [edge, w] : graph.edges()) {
    out << csv_field(edge.source.lemma) << ',' << pos_label(edge.source.pos) << ','
        << csv_field(edge.target.lemma) << ',' << pos_label(edge.target.pos) << ','
        << kind_label(edge.kind) << ',' << w << "\r\n";
  }
}

nlohmann::json graph_to_json(const LexicalGraph& graph) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& [node, f] : graph.nodes()) {
    nodes.push_back({{"lemma", node.lemma}, {"pos", pos_label(node.pos)}, {"frequency", f}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [edge, w] : graph.edges()) {
    edges.push_back({{"source", edge.source.lemma},
                     {"source_pos", pos_label(edge.source.pos)},
                     {"target", edge.target.lemma},
                     {"target_pos", pos_label(edge.target.pos)},
                     {"kind", kind_label(edge.kind)},
                     {"weight", w}});
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

LexicalGraph graph_from_json(const nlohmann::json& doc) {
  auto fail = [](const std::string& what) { return Error("malformed graph document: " + what); };
  auto str = [&](const nlohmann::json& obj, const char* field) {
    if (!obj.is_object() || !obj.contains(field) || !obj[field].is_string()) {
      throw fail(std::string("missing string field '") + field + "'");
    }
    return obj[field].get<std::string>();
  };
  auto count = [&](const nlohmann::json& obj, const char* field) {
    if (!obj.contains(field) || !obj[field].is_number_unsigned()) {
      throw fail(std::string("missing positive integer field '") + field + "'");
    }
    const auto v = obj[field].get<std::uint64_t>();
    if (v == 0) throw fail(std::string("field '") + field + "' must be positive");
    return v;
  };
  auto pos = [&](const nlohmann::json& obj, const char* field) {
    const std::string label = str(obj, field);
    auto p = parse_pos(label);
    if (!p || pos_label(*p) != label) throw fail("unknown class '" + label + "'");
    return *p;
  };

  if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    throw fail("expected an object with 'nodes' and 'edges' arrays");
  }
  LexicalGraph graph;
  for (const auto& n : doc["nodes"]) {
    LexKey key{str(n, "lemma"), pos(n, "pos")};
    if (graph.contains(key)) throw fail("duplicate node '" + key.lemma + "'");
    graph.add_node(key, count(n, "frequency"));
  }
  for (const auto& e : doc["edges"]) {
    const std::string kind_text = str(e, "kind");
    auto kind = parse_kind(kind_text);
    if (!kind) throw fail("unknown edge kind '" + kind_text + "'");
    EdgeKey key{{str(e, "source"), pos(e, "source_pos")},
                {str(e, "target"), pos(e, "target_pos")},
                *kind};
    if (!graph.contains(key.source) || !graph.contains(key.target)) {
      throw fail("edge endpoint is not a node");
    }
    if (graph.weight(key)) throw fail("duplicate edge");
    graph.add_edge(key, count(e, "weight"));
  }
  return graph;
}

std::string to_json_text(const LexicalGraph& graph) { return graph_to_json(graph).dump(2) + "\n"; }

void export_gexf(const LexicalGraph& graph, const StyleSpec& style,
                 const std::filesystem::path& path) {
  export_to(path, [&](std::ostream& out) { write_gexf(out, graph, style); });
}

void export_dot(const LexicalGraph& graph, const StyleSpec& style,
                const std::filesystem::path& path) {
  export_to(path, [&](std::ostream& out) { write_dot(out, graph, style); });
}

void export_json(const LexicalGraph& graph, const std::filesystem::path& path) {
  io::write_file_atomic(path, to_json_text(graph));
}

void export_csv_edges(const LexicalGraph& graph, const std::filesystem::path& path) {
  export_to(path, [&](std::ostream& out) { write_csv_edges(out, graph); });
}

LexicalGraph import_json(const std::filesystem::path& path) {
  const std::string text = io::read_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
  try {
    return graph_from_json(doc);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace letternet
