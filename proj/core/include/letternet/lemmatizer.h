#ifndef LETTERNET_LEMMATIZER_H_
#define LETTERNET_LEMMATIZER_H_

#include <string>
#include <string_view>

#include "letternet/lexicon.h"
#include "letternet/pos.h"

namespace letternet {

// Rule-based lemmatizer: irregular table first, then class-conditioned suffix
// stripping (-s/-es/-ies for nouns; -s/-es/-ed/-ing/-eth for verbs) with
// consonant undoubling and e-restoration checked against the word list.
// Other classes are returned unchanged. Rules are applied until nothing
// changes, so lemmatize(lemmatize(w, p), p) == lemmatize(w, p).
class Lemmatizer {
 public:
  Lemmatizer();
  Lemmatizer(const EnglishLexicon& lexicon, const IrregularForms& irregulars);

  std::string lemmatize(std::string_view normalized, PosClass pos) const;

 private:
  std::string step(const std::string& word, PosClass pos) const;
  bool known_as(std::string_view word, PosClass pos) const;

  const EnglishLexicon* lexicon_;
  const IrregularForms* irregulars_;
};

// Uses the shipped word lists.
std::string lemmatize(std::string_view normalized, PosClass pos);

}  // namespace letternet

#endif  // LETTERNET_LEMMATIZER_H_
