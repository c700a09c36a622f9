#include "commands.h"

#include <future>
#include <set>

#include <fmt/format.h>

#include "letternet/corpus.h"
#include "letternet/evaluation.h"
#include "letternet/export.h"
#include "letternet/io.h"
#include "letternet/lexicon.h"
#include "letternet/prune.h"
#include "letternet/tagger.h"
#include "letternet/vertical.h"

namespace letternet::cli {

namespace fs = std::filesystem;

namespace {

Pipeline make_pipeline(const RunConfig& cfg) {
  VariantLexicon variants = VariantLexicon::builtin();
  if (cfg.variant_lexicon) variants.merge(VariantLexicon::load(*cfg.variant_lexicon));
  PipelineConfig pcfg;
  pcfg.split.colon_boundary = cfg.colon_boundary;
  if (cfg.abbreviations) pcfg.split.abbreviations = load_abbreviations(*cfg.abbreviations);
  return Pipeline(std::move(variants), std::make_shared<BaselineTagger>(), std::move(pcfg));
}

void write_outputs(const RunConfig& cfg, const NamedGraph& g, std::ostream& out) {
  for (OutputFormat format : cfg.formats) {
    const fs::path path = cfg.out_dir / fmt::format("{}.{}", g.name, format_extension(format));
    switch (format) {
      case OutputFormat::kGexf: export_gexf(g.graph, cfg.style, path); break;
      case OutputFormat::kDot: export_dot(g.graph, cfg.style, path); break;
      case OutputFormat::kJson: export_json(g.graph, path); break;
      case OutputFormat::kCsv: export_csv_edges(g.graph, path); break;
    }
    out << "wrote " << path.string() << "\n";
  }
  const fs::path stats = cfg.out_dir / (g.name + ".stats.txt");
  io::write_file_atomic(stats, stats_report(g.graph, cfg.top_n));
  out << "wrote " << stats.string() << "\n";
}

void ensure_out_dir(const RunConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw Error("cannot create output directory '" + cfg.out_dir.string() + "': " + ec.message());
}

}  // namespace

std::vector<AnnotatedDoc> annotate_corpus(const RunConfig& cfg, Diagnostics& diag) {
  const std::vector<ManifestEntry> entries = load_manifest(cfg.manifest);
  if (entries.empty()) diag.warn("manifest '" + cfg.manifest.string() + "' lists no letters");

  CleaningConfig cleaning;
  cleaning.rejoin_hyphenation = cfg.rejoin_hyphenation;
  const Corpus corpus = load_corpus(entries, cleaning, &diag);
  const Pipeline pipeline = make_pipeline(cfg);

  struct Result {
    AnnotatedDoc doc;
    Diagnostics diag;
  };
  std::vector<std::future<Result>> tasks;
  tasks.reserve(entries.size());
  for (const ManifestEntry& entry : entries) {
    if (entry.format == DocumentFormat::kVertical) {
      tasks.push_back(std::async(std::launch::async, [&entry] {
        Result r;
        r.doc = ingest_pretagged(entry.path, entry.meta.id, &r.diag);
        return r;
      }));
      continue;
    }
    const Letter* letter = corpus.find(entry.meta.id);
    tasks.push_back(std::async(std::launch::async, [&pipeline, letter] {
      Result r;
      r.doc = pipeline.annotate(letter->meta.id, letter->analysis_text(), &r.diag);
      return r;
    }));
  }
  std::vector<AnnotatedDoc> docs;
  docs.reserve(tasks.size());
  for (auto& task : tasks) {
    Result r = task.get();
    diag.merge(r.diag);
    docs.push_back(std::move(r.doc));
  }
  return docs;
}

std::vector<RelationRecord> extract_records(const RunConfig& cfg, const AnnotatedDoc& doc) {
  AnnotatedDoc resolved = doc;
  if (cfg.anaphora) resolved = apply_anaphora(doc, load_anaphora_map(*cfg.anaphora));
  if (cfg.mode == ExtractionMode::kPairs) return extract_window_pairs(resolved, cfg.pairs);
  CooccurrenceConfig co;
  co.window = cfg.window;
  return extract_cooccurrences(resolved, co);
}

std::vector<NamedGraph> build_networks(const RunConfig& cfg, std::span<const AnnotatedDoc> docs) {
  std::vector<NamedGraph> graphs;
  std::vector<RelationRecord> all;
  for (const AnnotatedDoc& doc : docs) {
    std::vector<RelationRecord> records = extract_records(cfg, doc);
    if (cfg.scope != Scope::kMerged) {
      const LexicalGraph g = build_graph(records, std::span<const AnnotatedDoc>(&doc, 1));
      graphs.push_back({doc.letter_id, prune(g, cfg.prune)});
    }
    all.insert(all.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }
  if (cfg.scope != Scope::kPerLetter) {
    graphs.push_back({"merged", prune(build_graph(all, docs), cfg.prune)});
  }
  return graphs;
}

namespace {

void write_vertical(const RunConfig& cfg, std::span<const AnnotatedDoc> docs, std::ostream& out) {
  ensure_out_dir(cfg);
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  for (const AnnotatedDoc& doc : docs) {
    io::write_file_atomic(cfg.out_dir / (doc.letter_id + ".vert"), to_vertical(doc));
    sentences += doc.sentences.size();
    tokens += doc.token_count();
  }
  out << fmt::format("letters: {}\nsentences: {}\ntokens: {}\n", docs.size(), sentences, tokens);
}

void write_networks(const RunConfig& cfg, std::span<const AnnotatedDoc> docs, std::ostream& out) {
  ensure_out_dir(cfg);
  for (const NamedGraph& g : build_networks(cfg, docs)) {
    write_outputs(cfg, g, out);
    out << fmt::format("{}: {} nodes, {} edges\n", g.name, g.graph.node_count(),
                       g.graph.edge_count());
  }
}

}  // namespace

int cmd_preprocess(const RunConfig& cfg, std::ostream& out, Diagnostics& diag) {
  write_vertical(cfg, annotate_corpus(cfg, diag), out);
  return 0;
}

int cmd_network(const RunConfig& cfg, std::ostream& out, Diagnostics& diag) {
  write_networks(cfg, annotate_corpus(cfg, diag), out);
  return 0;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out, Diagnostics& diag) {
  if (!cfg.gold) throw Error("eval needs a gold file (--gold)");
  const GoldTriples gold = load_gold_triples(*cfg.gold);
  if (gold.empty()) throw Error("gold file '" + cfg.gold->string() + "' contains no triples");

  std::set<std::string> letters;
  for (const GoldTriple& t : gold) letters.insert(t.letter_id);
  RunConfig pairs_cfg = cfg;
  pairs_cfg.mode = ExtractionMode::kPairs;
  std::vector<RelationRecord> predicted;
  for (const AnnotatedDoc& doc : annotate_corpus(cfg, diag)) {
    if (!letters.contains(doc.letter_id)) continue;
    letters.erase(doc.letter_id);
    auto records = extract_records(pairs_cfg, doc);
    predicted.insert(predicted.end(), records.begin(), records.end());
  }
  for (const std::string& missing : letters) {
    diag.warn("gold letter " + missing + " is not in the manifest");
  }

  const std::string report = format_eval_report(evaluate_pairs(predicted, gold));
  ensure_out_dir(cfg);
  io::write_file_atomic(cfg.out_dir / "eval.txt", report);
  out << report;
  return 0;
}

int cmd_stats(const RunConfig& cfg, const fs::path& graph_file, std::ostream& out,
              Diagnostics& diag) {
  if (!graph_file.empty()) {
    out << stats_report(import_json(graph_file), cfg.top_n);
    return 0;
  }
  RunConfig merged = cfg;
  merged.scope = Scope::kMerged;
  const std::vector<AnnotatedDoc> docs = annotate_corpus(merged, diag);
  out << stats_report(build_networks(merged, docs).back().graph, cfg.top_n);
  return 0;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, Diagnostics& diag) {
  const std::vector<AnnotatedDoc> docs = annotate_corpus(cfg, diag);
  write_vertical(cfg, docs, out);
  write_networks(cfg, docs, out);
  return 0;
}

}  // namespace letternet::cli
