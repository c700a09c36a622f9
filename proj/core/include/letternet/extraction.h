#ifndef LETTERNET_EXTRACTION_H_
#define LETTERNET_EXTRACTION_H_

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "letternet/pipeline.h"
#include "letternet/pos.h"

namespace letternet {

enum class RelationKind { COOCCUR, SUBJ, OBJ };

std::string_view kind_label(RelationKind kind);
std::optional<RelationKind> parse_kind(std::string_view label);

// Node identity in the lexical network. Noun "lead" and verb "lead" differ.
struct LexKey {
  std::string lemma;
  PosClass pos = PosClass::OTHER;

  auto operator<=>(const LexKey&) const = default;
};

// One extracted link.
//   COOCCUR: a <= b in (lemma, pos) order.
//   SUBJ:    a is the candidate subject noun, b the verb.
//   OBJ:     a is the candidate object noun, b the verb.
struct RelationRecord {
  RelationKind kind = RelationKind::COOCCUR;
  LexKey a;
  LexKey b;
  std::string letter_id;
  std::size_t sent_idx = 0;

  bool operator==(const RelationRecord&) const = default;
};

struct CooccurrenceConfig {
  // nullopt: the whole sentence is the context. Otherwise two tokens
  // co-occur when their positions differ by at most *window.
  std::optional<std::size_t> window;
  // Classes that take part. PRON is never extracted, even if listed here.
  std::set<PosClass> pos_filter = {PosClass::NOUN, PosClass::VERB, PosClass::ADJ};

  static CooccurrenceConfig sentence() { return {}; }
  static CooccurrenceConfig windowed(std::size_t k) { return {.window = k}; }
};

// One record per unordered pair of positions inside a context unit, in
// sentence order. Identical lemmas at different positions are kept.
// Throws std::invalid_argument for a zero window.
std::vector<RelationRecord> extract_cooccurrences(const AnnotatedDoc& doc,
                                                  const CooccurrenceConfig& cfg = {});

struct WindowPairConfig {
  // Maximum number of tokens (any class, punctuation included) between a
  // verb and its candidate noun.
  std::size_t max_dist = 4;
  // A VERB between the two ends the scan...
  bool verb_blocker = true;
  // ...unless its lemma is one of these auxiliaries.
  std::set<std::string, std::less<>> non_blocking_lemmas = {"be", "have", "do"};
};

// Heuristic subject/object candidates: for every VERB, the nearest NOUN on
// the left becomes SUBJ and the nearest NOUN on the right becomes OBJ, within
// one sentence and cfg.max_dist intervening tokens. Other classes are
// skipped but counted; pronouns are never selected. Each verb yields at most
// one SUBJ and one OBJ, SUBJ first. Throws std::invalid_argument when
// max_dist is zero.
std::vector<RelationRecord> extract_window_pairs(const AnnotatedDoc& doc,
                                                 const WindowPairConfig& cfg = {});

// ---------------------------------------------------------------------------
// Manual anaphora resolution.

struct TokenAddress {
  std::string letter_id;
  std::size_t sent_idx = 0;
  std::size_t tok_idx = 0;

  auto operator<=>(const TokenAddress&) const = default;
};

// Pronoun position -> replacement. Replacements are NOUN lemmas.
using AnaphoraMap = std::map<TokenAddress, LexKey>;

// Format: letter_id <TAB> sent_idx <TAB> tok_idx <TAB> replacement_lemma,
// "#" comments. Throws Error with the line number on malformed lines.
AnaphoraMap parse_anaphora_map(std::string_view contents, std::string_view source_name);
AnaphoraMap load_anaphora_map(const std::filesystem::path& path);

// Relabels the targeted pronouns of `doc` (entries for other letters are
// ignored) with the replacement lemma and class NOUN. Throws Error naming
// the position when a target does not exist or is not a PRON token.
AnnotatedDoc apply_anaphora(const AnnotatedDoc& doc, const AnaphoraMap& map);

}  // namespace letternet

#endif  // LETTERNET_EXTRACTION_H_
