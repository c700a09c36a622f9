#ifndef LETTERNET_TOOLS_RUN_CONFIG_H_
#define LETTERNET_TOOLS_RUN_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "letternet/export.h"
#include "letternet/extraction.h"
#include "letternet/prune.h"

namespace letternet::cli {

enum class ExtractionMode { kCooccur, kPairs };
enum class Scope { kPerLetter, kMerged, kBoth };
enum class OutputFormat { kGexf, kDot, kJson, kCsv };

// Everything a subcommand needs, after flags and the config file have been
// merged. Paths are as given (relative to the working directory).
struct RunConfig {
  std::filesystem::path manifest;
  std::optional<std::filesystem::path> variant_lexicon;
  std::optional<std::filesystem::path> abbreviations;
  bool colon_boundary = false;
  bool rejoin_hyphenation = false;

  ExtractionMode mode = ExtractionMode::kCooccur;
  std::optional<std::size_t> window;  // nullopt = whole sentence
  WindowPairConfig pairs;

  PruneSpec prune;
  StyleSpec style;

  std::filesystem::path out_dir = "out";
  std::vector<OutputFormat> formats = {OutputFormat::kGexf};
  Scope scope = Scope::kMerged;
  std::optional<std::filesystem::path> gold;
  std::optional<std::filesystem::path> anaphora;
  std::size_t top_n = 10;
};

// Raw option values as they come from flags or the config file.
struct RawOptions {
  std::string manifest;
  std::string variant_lexicon;
  std::string abbreviations;
  bool colon_boundary = false;
  bool rejoin_hyphenation = false;
  std::string mode = "cooccur";
  std::string context = "sentence";
  std::size_t max_dist = 4;
  bool no_blocker = false;
  std::string prune_nodes = "gt0";
  std::string prune_edges = "gt0";
  bool keep_isolated = false;
  std::vector<std::string> formats = {"gexf"};
  std::string scope = "merged";
  std::string gold;
  std::string anaphora;
  std::string out = "out";
  double size_min = 10.0;
  double size_max = 60.0;
  std::vector<std::string> node_colors;  // CLASS=#RRGGBB
  std::vector<std::string> edge_colors;  // KIND=#RRGGBB
  std::size_t top_n = 10;
};

// Parses and checks the raw values. `need_manifest` is false for
// subcommands that work from a graph file. Throws letternet::Error.
RunConfig resolve(const RawOptions& raw, bool need_manifest);

std::string_view format_extension(OutputFormat format);

}  // namespace letternet::cli

#endif  // LETTERNET_TOOLS_RUN_CONFIG_H_
