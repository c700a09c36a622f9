#include "cli.h"

#include <CLI11.hpp>

#include "commands.h"
#include "letternet/diagnostics.h"
#include "run_config.h"

namespace letternet::cli {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build lexical networks from a corpus of letters."};
  app.name("letternet");
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "TOML configuration file; flags override its values")
      ->envname("LETTERNET_CONFIG");

  RawOptions raw;
  app.add_option("--manifest", raw.manifest, "Letter manifest (TSV with a header row)");
  app.add_option("--lexicon", raw.variant_lexicon, "Extra variant-spelling lexicon (TSV)");
  app.add_option("--abbreviations", raw.abbreviations, "Abbreviation list, one per line");
  app.add_flag("--colon-boundary", raw.colon_boundary, "Treat ':' as a sentence boundary");
  app.add_flag("--rejoin-hyphenation", raw.rejoin_hyphenation,
               "Rejoin words hyphenated across line breaks");
  app.add_option("--mode", raw.mode, "cooccur or pairs")->capture_default_str();
  app.add_option("--context", raw.context, "Co-occurrence context: sentence or window:K")
      ->capture_default_str();
  app.add_option("--max-dist", raw.max_dist, "Pair scan distance in tokens")
      ->capture_default_str();
  app.add_flag("--no-blocker", raw.no_blocker, "Let pair scans run past other verbs");
  app.add_option("--prune-nodes", raw.prune_nodes, "Node rule: gtN or meanK")
      ->capture_default_str();
  app.add_option("--prune-edges", raw.prune_edges, "Edge rule: gtN or meanK")
      ->capture_default_str();
  app.add_flag("--keep-isolated", raw.keep_isolated, "Keep nodes left without edges");
  app.add_option("--format", raw.formats, "Output formats: gexf, dot, json, csv")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--scope", raw.scope, "per-letter, merged or both")->capture_default_str();
  app.add_option("--gold", raw.gold, "Gold triples (TSV)");
  app.add_option("--anaphora", raw.anaphora, "Pronoun resolutions (TSV)");
  app.add_option("--out", raw.out, "Output directory")->capture_default_str();
  app.add_option("--size-min", raw.size_min, "Smallest node size")->capture_default_str();
  app.add_option("--size-max", raw.size_max, "Largest node size")->capture_default_str();
  app.add_option("--node-color", raw.node_colors, "CLASS=#RRGGBB (repeatable)");
  app.add_option("--edge-color", raw.edge_colors, "KIND=#RRGGBB (repeatable)");
  app.add_option("--top", raw.top_n, "Entries per ranking in stats reports")
      ->capture_default_str();

  auto* preprocess = app.add_subcommand("preprocess", "Write one vertical file per letter");
  auto* network = app.add_subcommand("network", "Build, prune and export networks");
  auto* eval = app.add_subcommand("eval", "Score window pairs against gold triples");
  auto* stats = app.add_subcommand("stats", "Print a statistics report");
  auto* run = app.add_subcommand("run", "preprocess followed by network");
  std::string graph_file;
  stats->add_option("--graph", graph_file, "Report on this JSON graph instead");
  for (auto* sub : {preprocess, network, eval, stats, run}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Diagnostics diag;
  int rc = 1;
  try {
    const bool need_manifest = !(stats->parsed() && !graph_file.empty());
    const RunConfig cfg = resolve(raw, need_manifest);
    if (preprocess->parsed()) {
      rc = cmd_preprocess(cfg, out, diag);
    } else if (network->parsed()) {
      rc = cmd_network(cfg, out, diag);
    } else if (eval->parsed()) {
      rc = cmd_eval(cfg, out, diag);
    } else if (stats->parsed()) {
      rc = cmd_stats(cfg, graph_file, out, diag);
    } else {
      rc = cmd_run(cfg, out, diag);
    }
  } catch (const std::exception& e) {
    for (const std::string& w : diag.warnings()) err << "warning: " << w << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  }
  for (const std::string& w : diag.warnings()) err << "warning: " << w << "\n";
  return rc;
}

}  // namespace letternet::cli
