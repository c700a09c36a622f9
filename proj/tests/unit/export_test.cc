#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "letternet/export.h"
#include "test_support.h"

namespace letternet {
namespace {

using testing::slurp;
using testing::TempDir;

constexpr PosClass N = PosClass::NOUN;
constexpr PosClass V = PosClass::VERB;

std::string gexf(const LexicalGraph& g, const StyleSpec& style = {}) {
  std::ostringstream out;
  write_gexf(out, g, style);
  return out.str();
}

std::string dot(const LexicalGraph& g) {
  std::ostringstream out;
  write_dot(out, g);
  return out.str();
}

std::string csv(const LexicalGraph& g) {
  std::ostringstream out;
  write_csv_edges(out, g);
  return out.str();
}

LexicalGraph subj_graph() {
  LexicalGraph g;
  g.add_node({"tutor", N}, 1);
  g.add_node({"use", V}, 5);
  g.add_edge({{"tutor", N}, {"use", V}, RelationKind::SUBJ}, 2);
  return g;
}

TEST(Rgb, ParseAndFormat) {
  EXPECT_EQ(Rgb::parse("#ff0000"), (Rgb{255, 0, 0}));
  EXPECT_EQ(Rgb::parse("#00FF7f").hex(), "#00FF7F");
  for (const std::string bad : {"", "ff0000", "#ff000", "#ff00000", "#gg0000"}) {
    EXPECT_THROW(Rgb::parse(bad), Error) << bad;
  }
}

TEST(StyleSpec, Defaults) {
  const StyleSpec style;
  EXPECT_EQ(style.node_color(V).hex(), "#FF0000");
  EXPECT_EQ(style.node_color(N).hex(), "#0000FF");
  EXPECT_EQ(style.node_color(PosClass::ADJ).hex(), "#00FF00");
  EXPECT_EQ(style.node_color(PosClass::ADV).hex(), "#999999");
  EXPECT_EQ(style.edge_color(RelationKind::SUBJ).hex(), "#FF0000");
  EXPECT_EQ(style.edge_color(RelationKind::OBJ).hex(), "#0000FF");
  EXPECT_EQ(style.edge_color(RelationKind::COOCCUR).hex(), "#888888");
}

TEST(StyleSpec, NodeSizeFormula) {
  const StyleSpec style;
  EXPECT_DOUBLE_EQ(style.node_size(5, 1, 5), 60.0);
  EXPECT_DOUBLE_EQ(style.node_size(1, 1, 5), 10.0);
  EXPECT_DOUBLE_EQ(style.node_size(3, 1, 5), 35.0);
  EXPECT_DOUBLE_EQ(style.node_size(4, 4, 4), 10.0);
  EXPECT_DOUBLE_EQ(style.node_size(9, 1, 5), 60.0);
}

TEST(StyleSpec, Validate) {
  StyleSpec style;
  EXPECT_NO_THROW(style.validate());
  style.size_min = 0;
  EXPECT_THROW(style.validate(), Error);
  style.size_min = 70;
  EXPECT_THROW(style.validate(), Error);
}

TEST(Gexf, VerbNodeIsRed) {
  LexicalGraph g;
  g.add_node({"see", V}, 2);
  const std::string doc = gexf(g);
  EXPECT_NE(doc.find("label=\"see\""), std::string::npos) << doc;
  EXPECT_NE(doc.find("r=\"255\" g=\"0\" b=\"0\""), std::string::npos) << doc;
}

TEST(Gexf, EmptyGraph) {
  const std::string doc = gexf(LexicalGraph{});
  EXPECT_NE(doc.find("<gexf"), std::string::npos);
  EXPECT_NE(doc.find("nodes"), std::string::npos);
  EXPECT_NE(doc.find("edges"), std::string::npos);
  EXPECT_EQ(doc.find("<node "), std::string::npos);
}

TEST(Gexf, SizesFollowFrequencyRange) {
  LexicalGraph g;
  g.add_node({"god", N}, 1);
  g.add_node({"lord", N}, 5);
  const std::string doc = gexf(g);
  const auto god = doc.find("label=\"god\"");
  const auto lord = doc.find("label=\"lord\"");
  ASSERT_LT(god, lord);
  EXPECT_NE(doc.find("<viz:size value=\"10\"", god), std::string::npos) << doc;
  EXPECT_LT(doc.find("<viz:size value=\"10\"", god), lord);
  EXPECT_NE(doc.find("<viz:size value=\"60\"", lord), std::string::npos) << doc;
}

TEST(Gexf, EdgesDeclareDirection) {
  LexicalGraph g = subj_graph();
  g.add_node({"care", N}, 1);
  g.add_edge({{"care", N}, {"tutor", N}, RelationKind::COOCCUR}, 1);
  const std::string doc = gexf(g);
  EXPECT_NE(doc.find("type=\"directed\""), std::string::npos);
  EXPECT_NE(doc.find("type=\"undirected\""), std::string::npos);
  EXPECT_NE(doc.find("weight=\"2\""), std::string::npos);
}

TEST(Gexf, EscapesMarkup) {
  LexicalGraph g;
  g.add_node({"a<&\"b", N}, 1);
  const std::string doc = gexf(g);
  EXPECT_NE(doc.find("a&lt;&amp;&quot;b"), std::string::npos) << doc;
}

TEST(Dot, SubjectEdgeIsDirected) {
  const std::string doc = dot(subj_graph());
  EXPECT_NE(doc.find("\"tutor/NOUN\" -> \"use/VERB\""), std::string::npos) << doc;
  EXPECT_EQ(doc.find("dir=none"), std::string::npos);
  EXPECT_NE(doc.find("#FF0000"), std::string::npos);
}

TEST(Dot, CooccurrenceHasNoArrow) {
  LexicalGraph g;
  g.add_node({"church", N}, 1);
  g.add_node({"come", V}, 1);
  g.add_edge({{"church", N}, {"come", V}, RelationKind::COOCCUR}, 1);
  EXPECT_NE(dot(g).find("dir=none"), std::string::npos);
}

TEST(Csv, HeaderPlusOneEdge) {
  const std::string doc = csv(subj_graph());
  EXPECT_EQ(doc, "src,src_pos,dst,dst_pos,kind,weight\r\ntutor,NOUN,use,VERB,SUBJ,2\r\n");
}

TEST(Csv, QuotesFields) {
  LexicalGraph g;
  g.add_node({"a,b", N}, 1);
  g.add_node({"say \"x\"", V}, 1);
  g.add_edge({{"say \"x\"", V}, {"a,b", N}, RelationKind::OBJ}, 1);
  EXPECT_NE(csv(g).find("\"say \"\"x\"\"\",VERB,\"a,b\",NOUN,OBJ,1"), std::string::npos)
      << csv(g);
}

TEST(Json, RoundTripRandomGraphs) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const LexicalGraph g = testing::random_graph(rng, 50);
    EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
    EXPECT_EQ(graph_from_json(nlohmann::json::parse(to_json_text(g))), g);
  }
}

TEST(Json, RejectsMalformedDocuments) {
  using nlohmann::json;
  EXPECT_THROW(graph_from_json(json::array()), Error);
  EXPECT_THROW(graph_from_json(json{{"nodes", json::array()}}), Error);
  const json dangling = {
      {"nodes", json::array()},
      {"edges", json::array({json{{"source", "a"}, {"source_pos", "NOUN"}, {"target", "b"},
                                  {"target_pos", "NOUN"}, {"kind", "COOCCUR"}, {"weight", 1}}})}};
  EXPECT_THROW(graph_from_json(dangling), Error);
  const json zero = {
      {"nodes", json::array({json{{"lemma", "a"}, {"pos", "NOUN"}, {"frequency", 0}}})},
      {"edges", json::array()}};
  EXPECT_THROW(graph_from_json(zero), Error);
}

TEST(Export, FilesAreDeterministic) {
  std::mt19937 rng(12);
  const LexicalGraph g = testing::random_graph(rng, 40);
  TempDir dir;
  export_gexf(g, {}, dir / "a.gexf");
  export_gexf(g, {}, dir / "b.gexf");
  export_dot(g, {}, dir / "a.dot");
  export_dot(g, {}, dir / "b.dot");
  export_json(g, dir / "a.json");
  export_json(g, dir / "b.json");
  export_csv_edges(g, dir / "a.csv");
  export_csv_edges(g, dir / "b.csv");
  for (const std::string ext : {"gexf", "dot", "json", "csv"}) {
    EXPECT_EQ(slurp(dir / ("a." + ext)), slurp(dir / ("b." + ext))) << ext;
  }
  EXPECT_EQ(import_json(dir / "a.json"), g);
}

TEST(Export, UnwritablePathFails) {
  EXPECT_THROW(export_json(subj_graph(), "/nonexistent/dir/graph.json"), Error);
  EXPECT_THROW(export_gexf(subj_graph(), {}, "/nonexistent/dir/graph.gexf"), Error);
}

TEST(Stats, EmptyGraph) {
  const std::string report = stats_report(LexicalGraph{});
  EXPECT_NE(report.find("nodes: 0\n"), std::string::npos) << report;
  EXPECT_NE(report.find("edges: 0\n"), std::string::npos) << report;
}

TEST(Stats, WeightDistribution) {
  LexicalGraph g;
  for (const std::string n : {"a", "b", "c", "d"}) g.add_node({n, N}, 1);
  g.add_edge({{"a", N}, {"b", N}, RelationKind::COOCCUR}, 3);
  g.add_edge({{"b", N}, {"c", N}, RelationKind::COOCCUR}, 2);
  g.add_edge({{"c", N}, {"d", N}, RelationKind::COOCCUR}, 1);
  const std::string report = stats_report(g);
  EXPECT_NE(report.find("edge weight: count 3 min 1 max 3 mean 2.0000 sd 0.8165"),
            std::string::npos)
      << report;
  EXPECT_NE(report.find("total edge weight: 6"), std::string::npos);
}

}  // namespace
}  // namespace letternet
