#ifndef LETTERNET_TAGGER_H_
#define LETTERNET_TAGGER_H_

#include <cstddef>
#include <span>
#include <string>

#include "letternet/lemmatizer.h"
#include "letternet/lexicon.h"
#include "letternet/pos.h"

namespace letternet {

// One sentence as seen by a tagger: original surfaces (for capitalisation)
// and their normalized spellings, index-aligned.
struct TagContext {
  std::span<const std::string> surfaces;
  std::span<const std::string> normalized;
};

// Pluggable part-of-speech tagger. Implementations may throw on a token they
// cannot handle; the pipeline then assigns OTHER and records a warning.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual PosClass tag(const TagContext& sentence, std::size_t index) const = 0;
};

// Deterministic baseline: word-list lookup taking the most frequent class,
// a few local disambiguation rules (after a determiner prefer NOUN, after
// "to"/a modal/a subject pronoun prefer VERB), inflection analysis through
// the lemmatizer, then suffix heuristics. Unknown words default to NOUN.
class BaselineTagger : public Tagger {
 public:
  BaselineTagger();
  BaselineTagger(const EnglishLexicon& lexicon, const IrregularForms& irregulars);

  PosClass tag(const TagContext& sentence, std::size_t index) const override;

 private:
  PosClass disambiguate(std::span<const PosClass> classes, const TagContext& sentence,
                        std::size_t index) const;
  PosClass guess_unknown(const TagContext& sentence, std::size_t index) const;

  const EnglishLexicon* lexicon_;
  const IrregularForms* irregulars_;
  Lemmatizer lemmatizer_;
};

}  // namespace letternet

#endif  // LETTERNET_TAGGER_H_
