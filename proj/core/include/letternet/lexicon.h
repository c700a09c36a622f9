#ifndef LETTERNET_LEXICON_H_
#define LETTERNET_LEXICON_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "letternet/pos.h"

namespace letternet {

// Historical spelling -> modern form, with an optional forced class and lemma.
struct VariantEntry {
  std::string normalized;
  std::optional<PosClass> pos;
  std::optional<std::string> lemma;

  bool operator==(const VariantEntry&) const = default;
};

// Lexicon of Early Modern spellings. Keys are case-folded on insertion and
// lookup. File format, one entry per line, "#" starts a comment:
//
//   historical <TAB> normalized <TAB> pos-or-"-" <TAB> lemma-or-"-"
class VariantLexicon {
 public:
  // The shipped lexicon (core/data/variant_lexicon.tsv).
  static VariantLexicon builtin();
  // Throws Error naming `source_name` and the line on malformed input.
  static VariantLexicon parse(std::string_view contents, std::string_view source_name);
  static VariantLexicon load(const std::filesystem::path& path);

  void insert(std::string_view historical, VariantEntry entry);
  // Entries of `other` replace entries with the same key.
  void merge(const VariantLexicon& other);

  const VariantEntry* find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, VariantEntry, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, VariantEntry, std::less<>> entries_;
};

// Modern-English word list mapping each form to its possible classes, most
// frequent first. Format: word <TAB> CLASS[,CLASS...].
class EnglishLexicon {
 public:
  static const EnglishLexicon& builtin();
  static EnglishLexicon parse(std::string_view contents, std::string_view source_name);

  void insert(std::string_view word, std::vector<PosClass> classes);

  // Empty span for unknown words.
  std::span<const PosClass> classes(std::string_view word) const;
  bool known(std::string_view word) const;
  bool has(std::string_view word, PosClass pos) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<PosClass>, std::less<>> entries_;
};

// Inflected forms whose lemma no suffix rule recovers ("children", "was").
// Format: form <TAB> CLASS <TAB> lemma.
class IrregularForms {
 public:
  static const IrregularForms& builtin();
  static IrregularForms parse(std::string_view contents, std::string_view source_name);

  void insert(std::string_view form, PosClass pos, std::string_view lemma);
  const std::string* find(std::string_view form, PosClass pos) const;
  // Classes under which `form` is listed, in file order.
  std::vector<PosClass> classes(std::string_view form) const;

 private:
  std::map<std::pair<std::string, PosClass>, std::string, std::less<>> entries_;
  std::map<std::string, std::vector<PosClass>, std::less<>> classes_;
};

// Lower-cased abbreviations, without the trailing period.
std::set<std::string, std::less<>> builtin_abbreviations();
std::set<std::string, std::less<>> parse_abbreviations(std::string_view contents);
std::set<std::string, std::less<>> load_abbreviations(const std::filesystem::path& path);

}  // namespace letternet

#endif  // LETTERNET_LEXICON_H_
