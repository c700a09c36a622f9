#ifndef LETTERNET_TOOLS_COMMANDS_H_
#define LETTERNET_TOOLS_COMMANDS_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "letternet/diagnostics.h"
#include "letternet/graph.h"
#include "letternet/pipeline.h"
#include "run_config.h"

namespace letternet::cli {

struct NamedGraph {
  std::string name;  // letter id, or "merged"
  LexicalGraph graph;
};

// Annotated documents for every manifest entry, in manifest order. Text
// entries go through the pipeline (concurrently), vertical entries are
// ingested as they are.
std::vector<AnnotatedDoc> annotate_corpus(const RunConfig& cfg, Diagnostics& diag);

// Relation records per document for the configured mode, after anaphora
// resolution when an anaphora file is configured.
std::vector<RelationRecord> extract_records(const RunConfig& cfg, const AnnotatedDoc& doc);

// Pruned graphs for the configured scope: per-letter graphs in manifest
// order, then the merged graph.
std::vector<NamedGraph> build_networks(const RunConfig& cfg, std::span<const AnnotatedDoc> docs);

int cmd_preprocess(const RunConfig& cfg, std::ostream& out, Diagnostics& diag);
int cmd_network(const RunConfig& cfg, std::ostream& out, Diagnostics& diag);
int cmd_eval(const RunConfig& cfg, std::ostream& out, Diagnostics& diag);
// Reports on `graph_file` (JSON export) when given, otherwise on the merged
// network built from the manifest.
int cmd_stats(const RunConfig& cfg, const std::filesystem::path& graph_file, std::ostream& out,
              Diagnostics& diag);
int cmd_run(const RunConfig& cfg, std::ostream& out, Diagnostics& diag);

}  // namespace letternet::cli

#endif  // LETTERNET_TOOLS_COMMANDS_H_
