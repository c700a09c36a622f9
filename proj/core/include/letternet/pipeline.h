#ifndef LETTERNET_PIPELINE_H_
#define LETTERNET_PIPELINE_H_

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "letternet/diagnostics.h"
#include "letternet/lemmatizer.h"
#include "letternet/lexicon.h"
#include "letternet/pos.h"
#include "letternet/tagger.h"

namespace letternet {

struct Token {
  std::string surface;     // as in the text, original case
  std::string normalized;  // modern spelling, lower case
  std::string lemma;       // lower case
  PosClass pos = PosClass::OTHER;
  std::size_t sent_idx = 0;
  std::size_t tok_idx = 0;

  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

struct AnnotatedDoc {
  std::string letter_id;
  std::vector<Sentence> sentences;

  std::size_t token_count() const;
  bool operator==(const AnnotatedDoc&) const = default;
};

struct SplitConfig {
  // Also end sentences at ':' (clause boundaries in long periodic prose).
  bool colon_boundary = false;
  // A '.' right after one of these (lower case, no period) does not end a
  // sentence. Single capital letters (initials) never end one either.
  std::set<std::string, std::less<>> abbreviations = builtin_abbreviations();
};

// Splits after '.', '?' and '!' (and ':' when configured) when the mark is
// followed by whitespace or the end of text. Closing quotes and brackets stay
// with the sentence they close. Sentences are trimmed; together they cover
// every non-whitespace character of `text` in order.
std::vector<std::string> split_sentences(std::string_view text, const SplitConfig& cfg = {});

// Whitespace and punctuation tokenization. Apostrophes and hyphens between
// word characters stay inside the word, '.' and ',' between digits stay
// inside the number, and a run of one repeated punctuation character ("...",
// "--") is a single token. Bytes >= 0x80 count as word characters except
// for typographic quotes, dashes and the ellipsis.
std::vector<std::string> tokenize(std::string_view sentence);

// Historical-to-modern spelling for one case-folded word: variant lexicon,
// then (for words the word list does not know) long-s and u/v rewriting,
// then respellings accepted only when they produce a known word (i/j, final
// -e, -ll, -ie, -cion).
std::string normalize_spelling(std::string_view lower, const VariantLexicon& variants,
                               const EnglishLexicon& lexicon = EnglishLexicon::builtin(),
                               const IrregularForms& irregulars = IrregularForms::builtin());

// Annotates one tokenized sentence. Forms listed in the variant lexicon take
// their normalized form, class and lemma from it; everything else goes
// through `tagger` and the lemmatizer. Output has exactly one Token per input
// surface.
std::vector<Token> normalize_and_tag(std::span<const std::string> surfaces,
                                     const VariantLexicon& variants, const Tagger& tagger,
                                     std::size_t sent_idx = 0, Diagnostics* diag = nullptr);

struct PipelineConfig {
  SplitConfig split;
};

// Sentence splitting, tokenization, normalization, tagging, lemmatization.
// Stateless once built; annotate() may be called from several threads.
class Pipeline {
 public:
  Pipeline();
  Pipeline(VariantLexicon variants, std::shared_ptr<const Tagger> tagger, PipelineConfig cfg);

  AnnotatedDoc annotate(std::string_view letter_id, std::string_view text,
                        Diagnostics* diag = nullptr) const;

  const PipelineConfig& config() const { return cfg_; }
  const VariantLexicon& variants() const { return variants_; }

 private:
  VariantLexicon variants_;
  std::shared_ptr<const Tagger> tagger_;
  PipelineConfig cfg_;
};

}  // namespace letternet

#endif  // LETTERNET_PIPELINE_H_
