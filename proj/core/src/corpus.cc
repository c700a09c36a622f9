#include "letternet/corpus.h"

#include <algorithm>
#include <charconv>
#include <future>
#include <map>
#include <set>
#include <utility>

#include "letternet/io.h"
#include "letternet/text.h"

namespace letternet {

namespace fs = std::filesystem;

void validate_meta(const LetterMeta& meta) {
  if (meta.id.empty()) throw Error("letter id must not be empty");
  if (meta.year && (*meta.year < kMinLetterYear || *meta.year > kMaxLetterYear)) {
    throw Error("letter " + meta.id + ": year " + std::to_string(*meta.year) +
                " outside [" + std::to_string(kMinLetterYear) + ", " +
                std::to_string(kMaxLetterYear) + "]");
  }
}

namespace {

std::string strip_markup(std::string_view s, Diagnostics* diag) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '<') {
      out.push_back(s[i++]);
      continue;
    }
    const std::size_t close = s.find('>', i + 1);
    const std::size_t reopen = s.find('<', i + 1);
    if (close == std::string_view::npos || (reopen != std::string_view::npos && reopen < close)) {
      warn(diag, "unbalanced '<' at offset " + std::to_string(i) + " kept as text");
      out.push_back(s[i++]);
      continue;
    }
    i = close + 1;
  }
  return out;
}

std::string strip_notes(std::string_view s, Diagnostics* diag) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '[') {
      out.push_back(s[i++]);
      continue;
    }
    // Find the matching close, tracking depth only to detect nesting.
    int depth = 0;
    bool nested = false;
    std::size_t j = i;
    for (; j < s.size(); ++j) {
      if (s[j] == '[') {
        if (++depth > 1) nested = true;
      } else if (s[j] == ']') {
        if (--depth == 0) break;
      }
    }
    if (j == s.size()) {
      warn(diag, "unbalanced '[' at offset " + std::to_string(i) + " kept as text");
      out.push_back(s[i++]);
      continue;
    }
    if (nested) {
      warn(diag, "nested brackets at offset " + std::to_string(i) + " kept as text");
      out.append(s.substr(i, j + 1 - i));
    }
    i = j + 1;
  }
  return out;
}

std::string rejoin_hyphenation(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '-' && !out.empty() && text::is_ascii_alpha(out.back())) {
      std::size_t j = i + 1;
      while (j < s.size() && (s[j] == ' ' || s[j] == '\t' || s[j] == '\r')) ++j;
      if (j < s.size() && s[j] == '\n') {
        ++j;
        while (j < s.size() && (s[j] == ' ' || s[j] == '\t')) ++j;
        if (j < s.size() && text::is_ascii_alpha(s[j])) {
          i = j;
          continue;
        }
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (text::is_ascii_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string clean_once(std::string_view raw, const CleaningConfig& cfg, Diagnostics* diag) {
  std::string s(raw);
  if (cfg.strip_markup) s = strip_markup(s, diag);
  if (cfg.strip_notes) s = strip_notes(s, diag);
  if (cfg.rejoin_hyphenation) s = rejoin_hyphenation(s);
  if (cfg.collapse_whitespace) s = collapse_whitespace(s);
  return s;
}

}  // namespace

std::string clean_text(std::string_view raw, const CleaningConfig& cfg, Diagnostics* diag) {
  // Removing one tag can expose another ("<<i>b>"), so iterate to a fixed
  // point. Every pass that changes the text shortens it.
  std::string current = clean_once(raw, cfg, diag);
  while (true) {
    std::string next = clean_once(current, cfg, nullptr);
    if (next == current) return current;
    current = std::move(next);
  }
}

std::string_view Letter::analysis_text() const {
  std::string_view text = clean_text;
  if (meta.cut_marker && !meta.cut_marker->empty()) {
    const std::size_t pos = text.find(*meta.cut_marker);
    if (pos != std::string_view::npos) text = text::trim(text.substr(0, pos));
  }
  return text;
}

Letter load_letter(const fs::path& path, LetterMeta meta, const CleaningConfig& cfg,
                   Diagnostics* diag) {
  validate_meta(meta);
  std::string raw = io::read_file(path);
  if (raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
  if (auto bad = text::find_invalid_utf8(raw)) {
    throw Error(path.string() + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  if (text::trim(raw).empty()) warn(diag, path.string() + ": empty letter body");

  Letter letter;
  letter.clean_text = clean_text(raw, cfg, diag);
  letter.raw_text = std::move(raw);
  letter.meta = std::move(meta);
  if (letter.meta.cut_marker && !letter.meta.cut_marker->empty() &&
      letter.clean_text.find(*letter.meta.cut_marker) == std::string::npos) {
    warn(diag, "letter " + letter.meta.id + ": cut marker not found");
  }
  return letter;
}

Corpus::Corpus(std::vector<Letter> letters) {
  for (Letter& letter : letters) add(std::move(letter));
}

void Corpus::add(Letter letter) {
  if (find(letter.meta.id) != nullptr) throw Error("duplicate letter id " + letter.meta.id);
  letters_.push_back(std::move(letter));
}

const Letter* Corpus::find(std::string_view id) const {
  for (const Letter& letter : letters_) {
    if (letter.meta.id == id) return &letter;
  }
  return nullptr;
}

Corpus filter_corpus(const Corpus& corpus, const LetterPredicate& predicate) {
  Corpus out;
  for (const Letter& letter : corpus) {
    if (predicate(letter.meta)) out.add(letter);
  }
  return out;
}

LetterPredicate sender_is(std::string sender) {
  return [sender = std::move(sender)](const LetterMeta& m) { return m.sender == sender; };
}

LetterPredicate addressee_is(std::string addressee) {
  return [addressee = std::move(addressee)](const LetterMeta& m) {
    return m.addressee && *m.addressee == addressee;
  };
}

LetterPredicate year_is(int year) {
  return [year](const LetterMeta& m) { return m.year && *m.year == year; };
}

LetterPredicate year_between(int first, int last) {
  return [first, last](const LetterMeta& m) {
    return m.year && *m.year >= first && *m.year <= last;
  };
}

LetterPredicate all_of(std::vector<LetterPredicate> predicates) {
  return [predicates = std::move(predicates)](const LetterMeta& m) {
    return std::all_of(predicates.begin(), predicates.end(),
                       [&](const LetterPredicate& p) { return p(m); });
  };
}

// --- manifest ---------------------------------------------------------------

namespace {

std::optional<std::string> cell(const std::vector<std::string_view>& fields,
                                const std::map<std::string, std::size_t>& columns,
                                const std::string& name) {
  auto it = columns.find(name);
  if (it == columns.end() || it->second >= fields.size()) return std::nullopt;
  std::string_view value = text::trim(fields[it->second]);
  if (value.empty() || value == "-") return std::nullopt;
  return std::string(value);
}

bool parse_bool(std::string_view v, const std::string& where) {
  const std::string lower = text::to_lower(v);
  if (lower == "true" || lower == "yes" || lower == "1") return true;
  if (lower == "false" || lower == "no" || lower == "0") return false;
  throw Error(where + ": expected a boolean, got '" + std::string(v) + "'");
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::string_view contents, const fs::path& base_dir,
                                          std::string_view source_name) {
  std::vector<ManifestEntry> entries;
  std::map<std::string, std::size_t> columns;
  std::set<std::string> ids;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.starts_with('#')) continue;
    const auto fields = text::split(line, '\t');
    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);

    if (columns.empty()) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        columns[text::to_lower(text::trim(fields[i]))] = i;
      }
      for (const char* required : {"id", "sender", "path"}) {
        if (!columns.contains(required)) {
          throw Error(where + ": manifest header lacks column '" + required + "'");
        }
      }
      continue;
    }

    ManifestEntry entry;
    auto id = cell(fields, columns, "id");
    if (!id) throw Error(where + ": missing id");
    entry.meta.id = *id;
    entry.meta.sender = cell(fields, columns, "sender").value_or("");
    entry.meta.addressee = cell(fields, columns, "addressee");
    if (auto year = cell(fields, columns, "year")) {
      std::string_view y = *year;
      if (y.ends_with('?')) {
        entry.meta.year_uncertain = true;
        y.remove_suffix(1);
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(y.data(), y.data() + y.size(), value);
      if (ec != std::errc() || ptr != y.data() + y.size()) {
        throw Error(where + ": bad year '" + *year + "'");
      }
      entry.meta.year = value;
    }
    if (auto u = cell(fields, columns, "year_uncertain")) {
      entry.meta.year_uncertain = entry.meta.year_uncertain || parse_bool(*u, where);
    }
    if (auto lang = cell(fields, columns, "language")) entry.meta.language = *lang;
    entry.meta.cut_marker = cell(fields, columns, "cut_marker");
    auto path = cell(fields, columns, "path");
    if (!path) throw Error(where + ": missing path");
    entry.path = fs::path(*path).is_absolute() ? fs::path(*path) : base_dir / *path;
    if (auto format = cell(fields, columns, "format")) {
      if (*format == "text") {
        entry.format = DocumentFormat::kText;
      } else if (*format == "vertical") {
        entry.format = DocumentFormat::kVertical;
      } else {
        throw Error(where + ": unknown format '" + *format + "'");
      }
    }
    try {
      validate_meta(entry.meta);
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
    if (!ids.insert(entry.meta.id).second) {
      throw Error(where + ": duplicate letter id " + entry.meta.id);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ManifestEntry> load_manifest(const fs::path& path) {
  const std::string contents = io::read_file(path);
  if (auto bad = text::find_invalid_utf8(contents)) {
    throw Error(path.string() + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  return parse_manifest(contents, path.parent_path(), path.string());
}

Corpus load_corpus(const std::vector<ManifestEntry>& entries, const CleaningConfig& cfg,
                   Diagnostics* diag) {
  struct Loaded {
    Letter letter;
    Diagnostics diag;
  };
  std::vector<std::future<Loaded>> pending;
  for (const ManifestEntry& entry : entries) {
    if (entry.format != DocumentFormat::kText) continue;
    pending.push_back(std::async(std::launch::async, [&entry, &cfg] {
      Loaded loaded;
      loaded.letter = load_letter(entry.path, entry.meta, cfg, &loaded.diag);
      return loaded;
    }));
  }
  Corpus corpus;
  for (auto& f : pending) {
    Loaded loaded = f.get();
    if (diag != nullptr) diag->merge(loaded.diag);
    corpus.add(std::move(loaded.letter));
  }
  return corpus;
}

}  // namespace letternet
