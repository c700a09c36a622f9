#include "letternet/evaluation.h"

#include <charconv>
#include <map>
#include <algorithm>
#include <tuple>

#include <fmt/format.h>

#include "letternet/io.h"
#include "letternet/text.h"

namespace letternet {

GoldTriples parse_gold_triples(std::string_view contents, std::string_view source_name) {
  GoldTriples gold;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty() || line.starts_with('#')) continue;
    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
    const auto fields = text::split(line, '\t');
    if (fields.size() != 5) {
      throw Error(where + ": expected 5 tab-separated columns, got " +
                  std::to_string(fields.size()));
    }
    GoldTriple triple;
    triple.letter_id = std::string(text::trim(fields[0]));
    const std::string_view sent = text::trim(fields[1]);
    auto [ptr, ec] = std::from_chars(sent.data(), sent.data() + sent.size(), triple.sent_idx);
    if (sent.empty() || ec != std::errc() || ptr != sent.data() + sent.size()) {
      throw Error(where + ": sentence index must be a non-negative integer, got '" +
                  std::string(sent) + "'");
    }
    triple.verb = text::to_lower(text::trim(fields[2]));
    auto optional_lemma = [](std::string_view f) -> std::optional<std::string> {
      f = text::trim(f);
      if (f.empty() || f == "-") return std::nullopt;
      return text::to_lower(f);
    };
    triple.subject = optional_lemma(fields[3]);
    triple.object = optional_lemma(fields[4]);
    if (triple.letter_id.empty() || triple.verb.empty()) throw Error(where + ": empty column");
    if (!triple.subject && !triple.object) {
      throw Error(where + ": a triple needs a subject or an object");
    }
    gold.push_back(std::move(triple));
  }
  return gold;
}

GoldTriples load_gold_triples(const std::filesystem::path& path) {
  return parse_gold_triples(io::read_file(path), path.string());
}

namespace {

// (letter, sentence, verb, noun, kind)
using PairKey = std::tuple<std::string, std::size_t, std::string, std::string, RelationKind>;
using PairCounts = std::map<PairKey, std::size_t>;

std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

PrfScore score(const PairCounts& predicted, const PairCounts& expected,
               std::optional<RelationKind> kind) {
  PrfScore s;
  for (const auto& [key, n] : predicted) {
    if (kind && std::get<4>(key) != *kind) continue;
    s.predicted += n;
    if (auto it = expected.find(key); it != expected.end()) s.matched += std::min(n, it->second);
  }
  for (const auto& [key, n] : expected) {
    if (!kind || std::get<4>(key) == *kind) s.expected += n;
  }
  s.precision = ratio(s.matched, s.predicted);
  s.recall = ratio(s.matched, s.expected);
  if (s.precision && s.recall) {
    const double sum = *s.precision + *s.recall;
    s.f1 = sum == 0.0 ? 0.0 : 2.0 * *s.precision * *s.recall / sum;
  }
  return s;
}

}  // namespace

EvalReport evaluate_pairs(std::span<const RelationRecord> predicted, const GoldTriples& gold) {
  PairCounts auto_counts;
  for (const RelationRecord& r : predicted) {
    if (r.kind == RelationKind::COOCCUR) continue;
    ++auto_counts[{r.letter_id, r.sent_idx, r.b.lemma, r.a.lemma, r.kind}];
  }
  PairCounts expected;
  for (const GoldTriple& t : gold) {
    if (t.subject) ++expected[{t.letter_id, t.sent_idx, t.verb, *t.subject, RelationKind::SUBJ}];
    if (t.object) ++expected[{t.letter_id, t.sent_idx, t.verb, *t.object, RelationKind::OBJ}];
  }
  return {score(auto_counts, expected, RelationKind::SUBJ),
          score(auto_counts, expected, RelationKind::OBJ),
          score(auto_counts, expected, std::nullopt)};
}

std::string format_eval_report(const EvalReport& report) {
  auto value = [](const std::optional<double>& v) {
    return v ? fmt::format("{:.4f}", *v) : std::string("n/a");
  };
  std::string out = fmt::format("{:<8} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}\n", "kind",
                                "matched", "predicted", "expected", "precision", "recall", "f1");
  auto row = [&](std::string_view name, const PrfScore& s) {
    out += fmt::format("{:<8} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}\n", name, s.matched,
                       s.predicted, s.expected, value(s.precision), value(s.recall), value(s.f1));
  };
  row("SUBJ", report.subj);
  row("OBJ", report.obj);
  row("overall", report.overall);
  return out;
}

}  // namespace letternet
