#include "letternet/extraction.h"

#include <charconv>
#include <stdexcept>

#include "letternet/diagnostics.h"

#include "letternet/io.h"
#include "letternet/text.h"

namespace letternet {

std::string_view kind_label(RelationKind kind) {
  switch (kind) {
    case RelationKind::COOCCUR: return "COOCCUR";
    case RelationKind::SUBJ: return "SUBJ";
    case RelationKind::OBJ: return "OBJ";
  }
  return "COOCCUR";
}

std::optional<RelationKind> parse_kind(std::string_view label) {
  for (RelationKind k : {RelationKind::COOCCUR, RelationKind::SUBJ, RelationKind::OBJ}) {
    if (label == kind_label(k)) return k;
  }
  return std::nullopt;
}

namespace {

LexKey key_of(const Token& t) { return {t.lemma, t.pos}; }

}  // namespace

std::vector<RelationRecord> extract_cooccurrences(const AnnotatedDoc& doc,
                                                  const CooccurrenceConfig& cfg) {
  if (cfg.window && *cfg.window == 0) {
    throw std::invalid_argument("co-occurrence window must be at least 1");
  }
  std::vector<RelationRecord> out;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence& sentence = doc.sentences[s];
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const PosClass pos = sentence[i].pos;
      if (pos != PosClass::PRON && cfg.pos_filter.contains(pos)) eligible.push_back(i);
    }
    for (std::size_t x = 0; x < eligible.size(); ++x) {
      for (std::size_t y = x + 1; y < eligible.size(); ++y) {
        const std::size_t i = eligible[x];
        const std::size_t j = eligible[y];
        if (cfg.window && j - i > *cfg.window) break;
        LexKey a = key_of(sentence[i]);
        LexKey b = key_of(sentence[j]);
        if (b < a) std::swap(a, b);
        out.push_back({RelationKind::COOCCUR, std::move(a), std::move(b), doc.letter_id, s});
      }
    }
  }
  return out;
}

std::vector<RelationRecord> extract_window_pairs(const AnnotatedDoc& doc,
                                                 const WindowPairConfig& cfg) {
  if (cfg.max_dist == 0) throw std::invalid_argument("max_dist must be at least 1");
  std::vector<RelationRecord> out;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence& sentence = doc.sentences[s];
    const auto blocks = [&](const Token& t) {
      return cfg.verb_blocker && t.pos == PosClass::VERB &&
             !cfg.non_blocking_lemmas.contains(t.lemma);
    };
    // Walks from the verb in direction `step` over at most max_dist
    // intervening tokens plus the candidate itself.
    const auto scan = [&](std::size_t verb, int step) -> const Token* {
      for (std::size_t d = 1; d <= cfg.max_dist + 1; ++d) {
        if (step < 0 && d > verb) return nullptr;
        const std::size_t k = step < 0 ? verb - d : verb + d;
        if (k >= sentence.size()) return nullptr;
        const Token& t = sentence[k];
        if (t.pos == PosClass::NOUN) return &t;
        if (blocks(t)) return nullptr;
      }
      return nullptr;
    };
    for (std::size_t v = 0; v < sentence.size(); ++v) {
      const Token& verb = sentence[v];
      if (verb.pos != PosClass::VERB) continue;
      if (const Token* subj = scan(v, -1)) {
        out.push_back({RelationKind::SUBJ, key_of(*subj), key_of(verb), doc.letter_id, s});
      }
      if (const Token* obj = scan(v, +1)) {
        out.push_back({RelationKind::OBJ, key_of(*obj), key_of(verb), doc.letter_id, s});
      }
    }
  }
  return out;
}

// --- anaphora -------------------------------------------------------------------

namespace {

std::size_t parse_index(std::string_view field, const std::string& where, const char* what) {
  field = text::trim(field);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error(where + ": " + what + " must be a non-negative integer, got '" +
                std::string(field) + "'");
  }
  return value;
}

std::string describe(const TokenAddress& a) {
  return a.letter_id + " sentence " + std::to_string(a.sent_idx) + " token " +
         std::to_string(a.tok_idx);
}

}  // namespace

AnaphoraMap parse_anaphora_map(std::string_view contents, std::string_view source_name) {
  AnaphoraMap map;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.starts_with('#')) continue;
    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
    const auto fields = text::split(line, '\t');
    if (fields.size() != 4) {
      throw Error(where + ": expected 4 tab-separated columns, got " +
                  std::to_string(fields.size()));
    }
    TokenAddress address{std::string(text::trim(fields[0])),
                         parse_index(fields[1], where, "sentence index"),
                         parse_index(fields[2], where, "token index")};
    const std::string lemma = text::to_lower(text::trim(fields[3]));
    if (address.letter_id.empty() || lemma.empty()) throw Error(where + ": empty column");
    map.insert_or_assign(std::move(address), LexKey{lemma, PosClass::NOUN});
  }
  return map;
}

AnaphoraMap load_anaphora_map(const std::filesystem::path& path) {
  return parse_anaphora_map(io::read_file(path), path.string());
}

AnnotatedDoc apply_anaphora(const AnnotatedDoc& doc, const AnaphoraMap& map) {
  AnnotatedDoc out = doc;
  for (const auto& [address, replacement] : map) {
    if (address.letter_id != doc.letter_id) continue;
    if (address.sent_idx >= out.sentences.size() ||
        address.tok_idx >= out.sentences[address.sent_idx].size()) {
      throw Error("anaphora target " + describe(address) + " does not exist");
    }
    Token& token = out.sentences[address.sent_idx][address.tok_idx];
    if (token.pos != PosClass::PRON) {
      throw Error("anaphora target " + describe(address) + " is '" + token.surface + "' (" +
                  std::string(pos_label(token.pos)) + "), not a pronoun");
    }
    token.lemma = replacement.lemma;
    token.pos = PosClass::NOUN;
  }
  return out;
}

}  // namespace letternet
