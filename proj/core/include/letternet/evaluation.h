#ifndef LETTERNET_EVALUATION_H_
#define LETTERNET_EVALUATION_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "letternet/extraction.h"

namespace letternet {

// One manually annotated clause. At least one of subject/object is present.
struct GoldTriple {
  std::string letter_id;
  std::size_t sent_idx = 0;
  std::string verb;
  std::optional<std::string> subject;
  std::optional<std::string> object;

  bool operator==(const GoldTriple&) const = default;
};

using GoldTriples = std::vector<GoldTriple>;

// Format: letter_id <TAB> sent_idx <TAB> verb <TAB> subj-or-"-" <TAB> obj-or-"-",
// "#" comments. Lemmas are lower-cased. Throws Error with the line number.
GoldTriples parse_gold_triples(std::string_view contents, std::string_view source_name);
GoldTriples load_gold_triples(const std::filesystem::path& path);

struct PrfScore {
  std::size_t matched = 0;
  std::size_t predicted = 0;
  std::size_t expected = 0;
  // nullopt when the ratio is 0/0; f1 is nullopt if either input is.
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
};

struct EvalReport {
  PrfScore subj;
  PrfScore obj;
  PrfScore overall;
};

// Each gold triple contributes one expected SUBJ pair if it has a subject and
// one OBJ pair if it has an object. Pairs match exactly on (letter, sentence,
// verb lemma, noun lemma, kind), as multisets. COOCCUR records are ignored.
EvalReport evaluate_pairs(std::span<const RelationRecord> predicted, const GoldTriples& gold);

std::string format_eval_report(const EvalReport& report);

}  // namespace letternet

#endif  // LETTERNET_EVALUATION_H_
