#ifndef LETTERNET_CORPUS_H_
#define LETTERNET_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "letternet/diagnostics.h"

namespace letternet {

inline constexpr int kMinLetterYear = 1400;
inline constexpr int kMaxLetterYear = 1900;

struct LetterMeta {
  std::string id;
  std::string sender;
  std::optional<std::string> addressee;  // absent for non-letter texts
  std::optional<int> year;
  bool year_uncertain = false;
  std::string language = "en";
  // Text from the first occurrence of this marker onwards is excluded from
  // analysis (e.g. a trailing passage in another language).
  std::optional<std::string> cut_marker;
};

// Checks the id and year bounds; throws Error.
void validate_meta(const LetterMeta& meta);

struct CleaningConfig {
  bool strip_markup = true;        // <i>, </p>, <br/>, ...
  bool strip_notes = true;         // [editorial insertions]
  bool collapse_whitespace = true;
  bool rejoin_hyphenation = false;  // "sepa-\nrate" -> "separate"
};

// Removes editorial noise from a transcription. The result is a fixed point:
// clean_text(clean_text(x)) == clean_text(x). Unbalanced '<' or '[' and
// nested brackets are kept verbatim and reported through `diag`.
std::string clean_text(std::string_view raw, const CleaningConfig& cfg = {},
                       Diagnostics* diag = nullptr);

struct Letter {
  LetterMeta meta;
  std::string raw_text;
  std::string clean_text;

  // clean_text truncated at the cut marker, if any.
  std::string_view analysis_text() const;
};

// Reads and cleans one letter body. Throws Error when the file cannot be read
// or is not valid UTF-8 (the message carries the byte offset). An empty file
// yields an empty letter and a warning.
Letter load_letter(const std::filesystem::path& path, LetterMeta meta,
                   const CleaningConfig& cfg = {}, Diagnostics* diag = nullptr);

class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Letter> letters);

  // Throws Error if a letter with the same id is already present.
  void add(Letter letter);

  const std::vector<Letter>& letters() const { return letters_; }
  const Letter* find(std::string_view id) const;
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

 private:
  std::vector<Letter> letters_;
};

using LetterPredicate = std::function<bool(const LetterMeta&)>;

// Letters satisfying `predicate`, in their original order.
Corpus filter_corpus(const Corpus& corpus, const LetterPredicate& predicate);

LetterPredicate sender_is(std::string sender);
LetterPredicate addressee_is(std::string addressee);
LetterPredicate year_is(int year);
LetterPredicate year_between(int first, int last);
LetterPredicate all_of(std::vector<LetterPredicate> predicates);

// ---------------------------------------------------------------------------
// Manifest: a tab-separated file with a header row naming the columns.
//
//   id  sender  addressee  year  year_uncertain  language  path  [cut_marker]  [format]
//
// "-" or an empty cell marks an absent value. A year written "1628?" sets
// year_uncertain. Relative paths resolve against the manifest's directory.
// format is "text" (default) or "vertical" for pre-tagged files.

enum class DocumentFormat { kText, kVertical };

struct ManifestEntry {
  LetterMeta meta;
  std::filesystem::path path;
  DocumentFormat format = DocumentFormat::kText;
};

std::vector<ManifestEntry> parse_manifest(std::string_view contents,
                                          const std::filesystem::path& base_dir,
                                          std::string_view source_name);
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

// Loads every text-format entry, reading files concurrently. Order follows the
// manifest. Vertical-format entries are skipped (see ingest_pretagged).
Corpus load_corpus(const std::vector<ManifestEntry>& entries,
                   const CleaningConfig& cfg = {}, Diagnostics* diag = nullptr);

}  // namespace letternet

#endif  // LETTERNET_CORPUS_H_
