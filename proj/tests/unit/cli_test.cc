#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <fmt/format.h>

#include "cli.h"
#include "letternet/corpus.h"
#include "letternet/evaluation.h"
#include "letternet/export.h"
#include "letternet/extraction.h"
#include "letternet/pipeline.h"
#include "letternet/vertical.h"
#include "test_support.h"

namespace letternet {
namespace {

namespace fs = std::filesystem;
using testing::data_dir;
using testing::slurp;
using testing::spit;
using testing::TempDir;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "letternet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string manifest() { return (data_dir() / "manifest.tsv").string(); }

std::vector<std::string> files_in(const fs::path& dir) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) names.push_back(e.path().filename().string());
  std::sort(names.begin(), names.end());
  return names;
}

// A one-letter manifest for the 1628 letter.
fs::path single_letter_manifest(const TempDir& dir) {
  const fs::path path = dir / "l01.tsv";
  spit(path, "id\tsender\taddressee\tyear\tcut_marker\tpath\nL01\tDury\tHartlib\t1628?\t"
             "=== Nachschrift ===\t" +
                 (data_dir() / "corpus" / "dury_hartlib_1628.txt").string() + "\n");
  return path;
}

TEST(Cli, PreprocessWritesOneFilePerLetter) {
  TempDir dir;
  const CliRun r = run({"preprocess", "--manifest", manifest(), "--out", dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto names = files_in(dir.path());
  ASSERT_EQ(names.size(), 13u);
  EXPECT_EQ(names.front(), "L01.vert");
  EXPECT_EQ(names.back(), "L13.vert");
  EXPECT_NE(r.out.find("letters: 13"), std::string::npos) << r.out;
  const AnnotatedDoc doc = ingest_pretagged(dir / "L01.vert");
  EXPECT_EQ(doc.letter_id, "L01");
  EXPECT_EQ(doc.sentences[0][3].lemma, "show");
}

TEST(Cli, EmptyManifestWarns) {
  TempDir dir;
  spit(dir / "empty.tsv", "id\tsender\tpath\n");
  const fs::path out = dir / "out";
  const CliRun r = run({"preprocess", "--manifest", (dir / "empty.tsv").string(), "--out",
                     out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_TRUE(!fs::exists(out) || fs::is_empty(out));
}

TEST(Cli, BadLexiconPathFails) {
  TempDir dir;
  const CliRun r = run({"preprocess", "--manifest", manifest(), "--lexicon", "/no/such/lexicon.tsv",
                     "--out", dir.path().string()});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("/no/such/lexicon.tsv"), std::string::npos) << r.err;
}

TEST(Cli, RejectsInvalidSettings) {
  TempDir dir;
  const std::string out = dir.path().string();
  EXPECT_NE(run({"network", "--manifest", manifest(), "--out", out, "--mode", "x"}).code, 0);
  EXPECT_NE(run({"network", "--manifest", manifest(), "--out", out, "--context", "window:0"}).code,
            0);
  EXPECT_NE(run({"network", "--manifest", manifest(), "--out", out, "--prune-nodes", "gt"}).code,
            0);
  EXPECT_NE(run({"network", "--manifest", manifest(), "--out", out, "--format", "png"}).code, 0);
  EXPECT_NE(run({"network", "--manifest", manifest(), "--out", out, "--max-dist", "0"}).code, 0);
  EXPECT_NE(run({"network", "--out", out}).code, 0);
  EXPECT_NE(run({"network", "--manifest", "/no/manifest.tsv", "--out", out}).code, 0);
}

TEST(Cli, CooccurrenceMeanPruning) {
  TempDir dir;
  const CliRun r = run({"network", "--manifest", manifest(), "--mode", "cooccur", "--prune-nodes",
                     "mean2", "--prune-edges", "mean2", "--scope", "merged", "--out",
                     dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(files_in(dir.path()), (std::vector<std::string>{"merged.gexf", "merged.stats.txt"}));
  const std::string gexf = slurp(dir / "merged.gexf");
  EXPECT_NE(gexf.find("label=\"church\""), std::string::npos);
  EXPECT_NE(gexf.find("label=\"man\""), std::string::npos);
}

TEST(Cli, PairsThresholdPruning) {
  TempDir dir;
  const CliRun r = run({"network", "--manifest", manifest(), "--mode", "pairs", "--prune-nodes",
                     "gt1", "--prune-edges", "gt2", "--format", "gexf", "--format", "json",
                     "--out", dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_TRUE(fs::exists(dir / "merged.gexf"));
  const LexicalGraph g = import_json(dir / "merged.json");
  EXPECT_FALSE(g.empty());
  for (const auto& [edge, weight] : g.edges()) {
    EXPECT_GT(weight, 2u);
    EXPECT_NE(edge.kind, RelationKind::COOCCUR);
  }
  for (const auto& [node, freq] : g.nodes()) EXPECT_GT(freq, 1u);
}

TEST(Cli, UnprunedSingleLetter) {
  TempDir dir;
  const fs::path m = single_letter_manifest(dir);
  const fs::path out = dir / "out";
  const CliRun r = run({"network", "--manifest", m.string(), "--mode", "pairs", "--scope",
                     "per-letter", "--format", "json", "--format", "gexf", "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_TRUE(fs::exists(out / "L01.gexf"));
  const LexicalGraph g = import_json(out / "L01.json");
  // The hand-extracted network links tutor and child through move and lead.
  const LexKey tutor{"tutor", PosClass::NOUN};
  const LexKey use{"use", PosClass::VERB};
  const LexKey move{"move", PosClass::VERB};
  const LexKey child{"child", PosClass::NOUN};
  EXPECT_TRUE(g.weight({tutor, use, RelationKind::SUBJ}).has_value());
  EXPECT_TRUE(g.weight({move, child, RelationKind::OBJ}).has_value());
}

TEST(Cli, AnaphoraLinksTutorAndLead) {
  TempDir dir;
  const fs::path m = single_letter_manifest(dir);
  const fs::path out = dir / "out";
  const CliRun r = run({"network", "--manifest", m.string(), "--mode", "pairs", "--format", "json",
                     "--anaphora", (data_dir() / "gold" / "L01_anaphora.tsv").string(), "--out",
                     out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const LexicalGraph g = import_json(out / "merged.json");
  EXPECT_TRUE(g.weight({{"tutor", PosClass::NOUN}, {"lead", PosClass::VERB}, RelationKind::SUBJ})
                  .has_value());
  EXPECT_TRUE(g.weight({{"lead", PosClass::VERB}, {"child", PosClass::NOUN}, RelationKind::OBJ})
                  .has_value());
}

TEST(Cli, EvalAgainstOwnOutputIsPerfect) {
  TempDir dir;
  const fs::path m = single_letter_manifest(dir);
  const Corpus corpus = load_corpus(load_manifest(m));
  const AnnotatedDoc doc = Pipeline().annotate("L01", corpus.find("L01")->analysis_text());
  std::string gold;
  for (const auto& r : extract_window_pairs(doc)) {
    const bool subj = r.kind == RelationKind::SUBJ;
    gold += fmt::format("L01\t{}\t{}\t{}\t{}\n", r.sent_idx, r.b.lemma, subj ? r.a.lemma : "-",
                        subj ? "-" : r.a.lemma);
  }
  spit(dir / "gold.tsv", gold);
  const fs::path out = dir / "out";
  const CliRun r = run({"eval", "--manifest", m.string(), "--gold", (dir / "gold.tsv").string(),
                     "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("overall"), std::string::npos);
  EXPECT_EQ(slurp(out / "eval.txt"), r.out);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.starts_with("kind")) continue;
    EXPECT_TRUE(line.ends_with("1.0000")) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST(Cli, EvalFixtureGoldMatchesLibrary) {
  TempDir dir;
  const fs::path gold_path = data_dir() / "gold" / "L01_triples.tsv";
  const CliRun r = run({"eval", "--manifest", manifest(), "--gold", gold_path.string(), "--out",
                     dir.path().string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Corpus corpus = load_corpus(load_manifest(data_dir() / "manifest.tsv"));
  const AnnotatedDoc doc = Pipeline().annotate("L01", corpus.find("L01")->analysis_text());
  const auto report = evaluate_pairs(extract_window_pairs(doc), load_gold_triples(gold_path));
  EXPECT_EQ(r.out, format_eval_report(report));
  ASSERT_TRUE(report.overall.precision && report.overall.recall);
  EXPECT_GE(*report.overall.precision, 0.0);
  EXPECT_LE(*report.overall.precision, 1.0);
  EXPECT_GE(*report.overall.recall, 0.0);
  EXPECT_LE(*report.overall.recall, 1.0);
}

TEST(Cli, EvalNeedsNonEmptyGold) {
  TempDir dir;
  spit(dir / "empty_gold.tsv", "# nothing here\n");
  const CliRun empty = run({"eval", "--manifest", manifest(), "--gold",
                         (dir / "empty_gold.tsv").string(), "--out", dir.path().string()});
  EXPECT_NE(empty.code, 0);
  EXPECT_NE(empty.err.find("empty_gold.tsv"), std::string::npos) << empty.err;
  const CliRun missing = run({"eval", "--manifest", manifest(), "--out", dir.path().string()});
  EXPECT_NE(missing.code, 0);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  TempDir dir;
  const fs::path out = dir / "out";
  spit(dir / "run.toml", "manifest = \"" + manifest() + "\"\nmode = \"pairs\"\n" +
                             "prune-nodes = \"gt100000\"\nformat = [\"json\"]\nout = \"" +
                             out.string() + "\"\n");
  const CliRun from_file = run({"network", "--config", (dir / "run.toml").string()});
  ASSERT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_TRUE(import_json(out / "merged.json").empty());
  EXPECT_FALSE(fs::exists(out / "merged.gexf"));

  const CliRun overridden =
      run({"network", "--config", (dir / "run.toml").string(), "--prune-nodes", "gt0"});
  ASSERT_EQ(overridden.code, 0) << overridden.err;
  const LexicalGraph g = import_json(out / "merged.json");
  EXPECT_FALSE(g.empty());
  for (const auto& [edge, w] : g.edges()) EXPECT_NE(edge.kind, RelationKind::COOCCUR);
}

TEST(Cli, ConfigFromEnvironment) {
  TempDir dir;
  const fs::path out = dir / "out";
  spit(dir / "env.toml", "manifest = \"" + manifest() + "\"\nout = \"" + out.string() + "\"\n");
  ::setenv("LETTERNET_CONFIG", (dir / "env.toml").c_str(), 1);
  const auto r = testing::run_cli_process({"preprocess"});
  ::unsetenv("LETTERNET_CONFIG");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(files_in(out).size(), 13u);
}

TEST(Cli, ProcessExitCodes) {
  TempDir dir;
  const auto ok = testing::run_cli_process(
      {"network", "--manifest", manifest(), "--out", dir.path().string()});
  EXPECT_EQ(ok.exit_code, 0) << ok.err;
  EXPECT_EQ(ok.out.find("warning"), std::string::npos);
  const auto bad = testing::run_cli_process({"network", "--manifest", "/no/manifest.tsv"});
  EXPECT_NE(bad.exit_code, 0);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, RerunsAreByteIdentical) {
  TempDir dir;
  const std::vector<std::string> common = {"run",      "--manifest", manifest(), "--scope",
                                           "both",     "--format",   "gexf",     "--format",
                                           "dot",      "--format",   "json",     "--format",
                                           "csv",      "--prune-nodes", "mean1", "--prune-edges",
                                           "mean1"};
  auto a = common;
  a.insert(a.end(), {"--out", (dir / "a").string()});
  auto b = common;
  b.insert(b.end(), {"--out", (dir / "b").string()});
  ASSERT_EQ(run(a).code, 0);
  ASSERT_EQ(run(b).code, 0);
  const auto names = files_in(dir / "a");
  EXPECT_EQ(names, files_in(dir / "b"));
  EXPECT_EQ(names.size(), 13u + 14u * 5u);
  for (const auto& name : names) {
    EXPECT_EQ(slurp(dir / "a" / name), slurp(dir / "b" / name)) << name;
  }
}

TEST(Cli, StatsFromGraphFile) {
  TempDir dir;
  ASSERT_EQ(run({"network", "--manifest", manifest(), "--format", "json", "--out",
                 dir.path().string()})
                .code,
            0);
  const CliRun r = run({"stats", "--graph", (dir / "merged.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, stats_report(import_json(dir / "merged.json")));
  const CliRun direct = run({"stats", "--manifest", manifest()});
  ASSERT_EQ(direct.code, 0) << direct.err;
  EXPECT_EQ(direct.out, r.out);
}

}  // namespace
}  // namespace letternet
