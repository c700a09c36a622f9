#include "letternet/lexicon.h"

#include <algorithm>

#include "letternet/diagnostics.h"
#include "letternet/embedded_data.h"
#include "letternet/io.h"
#include "letternet/text.h"

namespace letternet {

namespace {

// Calls fn(fields, where) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view contents, std::string_view source_name, Fn&& fn) {
  std::size_t line_no = 0;
  for (std::string_view line : text::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || text::trim(line).starts_with('#')) continue;
    fn(text::split(line, '\t'), std::string(source_name) + ":" + std::to_string(line_no));
  }
}

PosClass require_pos(std::string_view label, const std::string& where) {
  auto pos = parse_pos(text::trim(label));
  if (!pos) throw Error(where + ": unknown part of speech '" + std::string(label) + "'");
  return *pos;
}

}  // namespace

// --- VariantLexicon ---------------------------------------------------------

VariantLexicon VariantLexicon::builtin() {
  static const VariantLexicon kBuiltin = parse(embedded::variant_lexicon(), "<builtin variants>");
  return kBuiltin;
}

VariantLexicon VariantLexicon::parse(std::string_view contents, std::string_view source_name) {
  VariantLexicon lex;
  for_each_record(contents, source_name, [&](const auto& fields, const std::string& where) {
    if (fields.size() != 4) {
      throw Error(where + ": expected 4 tab-separated columns, got " +
                  std::to_string(fields.size()));
    }
    const std::string_view historical = text::trim(fields[0]);
    const std::string_view normalized = text::trim(fields[1]);
    if (historical.empty() || normalized.empty()) throw Error(where + ": empty form");
    VariantEntry entry;
    entry.normalized = text::to_lower(normalized);
    if (text::trim(fields[2]) != "-") entry.pos = require_pos(fields[2], where);
    if (const auto lemma = text::trim(fields[3]); lemma != "-" && !lemma.empty()) {
      entry.lemma = text::to_lower(lemma);
    }
    lex.insert(historical, std::move(entry));
  });
  return lex;
}

VariantLexicon VariantLexicon::load(const std::filesystem::path& path) {
  return parse(io::read_file(path), path.string());
}

void VariantLexicon::insert(std::string_view historical, VariantEntry entry) {
  entries_.insert_or_assign(text::to_lower(historical), std::move(entry));
}

void VariantLexicon::merge(const VariantLexicon& other) {
  for (const auto& [key, entry] : other.entries_) entries_.insert_or_assign(key, entry);
}

const VariantEntry* VariantLexicon::find(std::string_view word) const {
  auto it = entries_.find(text::to_lower(word));
  return it == entries_.end() ? nullptr : &it->second;
}

// --- EnglishLexicon ---------------------------------------------------------

const EnglishLexicon& EnglishLexicon::builtin() {
  static const EnglishLexicon kBuiltin = parse(embedded::english_lexicon(), "<builtin lexicon>");
  return kBuiltin;
}

EnglishLexicon EnglishLexicon::parse(std::string_view contents, std::string_view source_name) {
  EnglishLexicon lex;
  for_each_record(contents, source_name, [&](const auto& fields, const std::string& where) {
    if (fields.size() != 2) {
      throw Error(where + ": expected 2 tab-separated columns, got " +
                  std::to_string(fields.size()));
    }
    std::vector<PosClass> classes;
    for (std::string_view label : text::split(fields[1], ',')) {
      classes.push_back(require_pos(label, where));
    }
    lex.insert(text::trim(fields[0]), std::move(classes));
  });
  return lex;
}

void EnglishLexicon::insert(std::string_view word, std::vector<PosClass> classes) {
  auto& slot = entries_[text::to_lower(word)];
  for (PosClass pos : classes) {
    if (std::find(slot.begin(), slot.end(), pos) == slot.end()) slot.push_back(pos);
  }
}

std::span<const PosClass> EnglishLexicon::classes(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) return {};
  return it->second;
}

bool EnglishLexicon::known(std::string_view word) const { return entries_.contains(word); }

bool EnglishLexicon::has(std::string_view word, PosClass pos) const {
  auto c = classes(word);
  return std::find(c.begin(), c.end(), pos) != c.end();
}

// --- IrregularForms ---------------------------------------------------------

const IrregularForms& IrregularForms::builtin() {
  static const IrregularForms kBuiltin = parse(embedded::irregular_forms(), "<builtin irregulars>");
  return kBuiltin;
}

IrregularForms IrregularForms::parse(std::string_view contents, std::string_view source_name) {
  IrregularForms forms;
  for_each_record(contents, source_name, [&](const auto& fields, const std::string& where) {
    if (fields.size() != 3) {
      throw Error(where + ": expected 3 tab-separated columns, got " +
                  std::to_string(fields.size()));
    }
    forms.insert(text::trim(fields[0]), require_pos(fields[1], where), text::trim(fields[2]));
  });
  return forms;
}

void IrregularForms::insert(std::string_view form, PosClass pos, std::string_view lemma) {
  std::string key = text::to_lower(form);
  auto& cls = classes_[key];
  if (std::find(cls.begin(), cls.end(), pos) == cls.end()) cls.push_back(pos);
  entries_.insert_or_assign({std::move(key), pos}, text::to_lower(lemma));
}

const std::string* IrregularForms::find(std::string_view form, PosClass pos) const {
  auto it = entries_.find(std::pair<std::string, PosClass>(std::string(form), pos));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<PosClass> IrregularForms::classes(std::string_view form) const {
  auto it = classes_.find(form);
  return it == classes_.end() ? std::vector<PosClass>{} : it->second;
}

// --- abbreviations ------------------------------------------------------------

std::set<std::string, std::less<>> parse_abbreviations(std::string_view contents) {
  std::set<std::string, std::less<>> out;
  for (std::string_view line : text::split(contents, '\n')) {
    line = text::trim(line);
    if (line.empty() || line.starts_with('#')) continue;
    if (line.ends_with('.')) line.remove_suffix(1);
    out.insert(text::to_lower(line));
  }
  return out;
}

std::set<std::string, std::less<>> builtin_abbreviations() {
  static const auto kBuiltin = parse_abbreviations(embedded::abbreviations());
  return kBuiltin;
}

std::set<std::string, std::less<>> load_abbreviations(const std::filesystem::path& path) {
  return parse_abbreviations(io::read_file(path));
}

}  // namespace letternet
