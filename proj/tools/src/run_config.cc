#include "run_config.h"

#include <charconv>

#include "letternet/diagnostics.h"
#include "letternet/text.h"

namespace letternet::cli {

namespace {

std::filesystem::path existing(const std::string& path, std::string_view what) {
  if (!std::filesystem::exists(path)) {
    throw Error(std::string(what) + " '" + path + "' does not exist");
  }
  return path;
}

std::optional<std::filesystem::path> optional_existing(const std::string& path,
                                                       std::string_view what) {
  if (path.empty()) return std::nullopt;
  return existing(path, what);
}

std::pair<std::string, Rgb> color_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw Error("colour setting '" + text + "' is not NAME=#RRGGBB");
  return {text.substr(0, eq), Rgb::parse(text.substr(eq + 1))};
}

}  // namespace

RunConfig resolve(const RawOptions& raw, bool need_manifest) {
  RunConfig cfg;
  if (need_manifest) {
    if (raw.manifest.empty()) throw Error("no manifest given (use --manifest or the config file)");
    cfg.manifest = existing(raw.manifest, "manifest");
  }
  cfg.variant_lexicon = optional_existing(raw.variant_lexicon, "variant lexicon");
  cfg.abbreviations = optional_existing(raw.abbreviations, "abbreviation list");
  cfg.gold = optional_existing(raw.gold, "gold file");
  cfg.anaphora = optional_existing(raw.anaphora, "anaphora file");
  cfg.colon_boundary = raw.colon_boundary;
  cfg.rejoin_hyphenation = raw.rejoin_hyphenation;

  if (raw.mode == "cooccur") {
    cfg.mode = ExtractionMode::kCooccur;
  } else if (raw.mode == "pairs") {
    cfg.mode = ExtractionMode::kPairs;
  } else {
    throw Error("unknown mode '" + raw.mode + "' (expected cooccur or pairs)");
  }

  if (raw.context != "sentence") {
    const std::string_view prefix = "window:";
    std::size_t k = 0;
    const std::string_view digits = std::string_view(raw.context).substr(
        std::min(prefix.size(), raw.context.size()));
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (!raw.context.starts_with(prefix) || digits.empty() || ec != std::errc() ||
        ptr != digits.data() + digits.size() || k == 0) {
      throw Error("bad context '" + raw.context + "' (expected sentence or window:K, K >= 1)");
    }
    cfg.window = k;
  }

  if (raw.max_dist == 0) throw Error("max-dist must be at least 1");
  cfg.pairs.max_dist = raw.max_dist;
  cfg.pairs.verb_blocker = !raw.no_blocker;

  cfg.prune.node_rule = PruneRule::parse(raw.prune_nodes);
  cfg.prune.edge_rule = PruneRule::parse(raw.prune_edges);
  cfg.prune.drop_isolated = !raw.keep_isolated;

  cfg.style.size_min = raw.size_min;
  cfg.style.size_max = raw.size_max;
  for (const std::string& setting : raw.node_colors) {
    auto [name, rgb] = color_assignment(setting);
    const auto pos = parse_pos(name);
    if (!pos) throw Error("unknown class '" + name + "' in colour setting");
    cfg.style.node_colors[*pos] = rgb;
  }
  for (const std::string& setting : raw.edge_colors) {
    auto [name, rgb] = color_assignment(setting);
    const auto kind = parse_kind(name);
    if (!kind) throw Error("unknown edge kind '" + name + "' in colour setting");
    cfg.style.edge_colors[*kind] = rgb;
  }
  cfg.style.validate();

  cfg.formats.clear();
  for (const std::string& f : raw.formats) {
    OutputFormat format;
    if (f == "gexf") {
      format = OutputFormat::kGexf;
    } else if (f == "dot") {
      format = OutputFormat::kDot;
    } else if (f == "json") {
      format = OutputFormat::kJson;
    } else if (f == "csv") {
      format = OutputFormat::kCsv;
    } else {
      throw Error("unknown format '" + f + "' (expected gexf, dot, json or csv)");
    }
    if (std::find(cfg.formats.begin(), cfg.formats.end(), format) == cfg.formats.end()) {
      cfg.formats.push_back(format);
    }
  }

  if (raw.scope == "per-letter") {
    cfg.scope = Scope::kPerLetter;
  } else if (raw.scope == "merged") {
    cfg.scope = Scope::kMerged;
  } else if (raw.scope == "both") {
    cfg.scope = Scope::kBoth;
  } else {
    throw Error("unknown scope '" + raw.scope + "' (expected per-letter, merged or both)");
  }

  if (raw.out.empty()) throw Error("output directory must not be empty");
  cfg.out_dir = raw.out;
  cfg.top_n = raw.top_n;
  return cfg;
}

std::string_view format_extension(OutputFormat format) {
  switch (format) {
    case OutputFormat::kGexf: return "gexf";
    case OutputFormat::kDot: return "dot";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
  }
  return "gexf";
}

}  // namespace letternet::cli
