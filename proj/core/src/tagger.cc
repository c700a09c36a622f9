#include "letternet/tagger.h"

#include <algorithm>
#include <array>
#include <string_view>

#include "letternet/text.h"

namespace letternet {

namespace {

using text::ends_with;

constexpr std::array<std::string_view, 10> kSubjectPronouns = {
    "i", "we", "he", "she", "they", "you", "thou", "ye", "it", "who"};
constexpr std::array<std::string_view, 9> kPossessives = {
    "his", "her", "my", "our", "their", "its", "your", "thy", "thine"};

struct SuffixRule {
  std::string_view suffix;
  PosClass pos;
};

// Longest suffixes first within each group; the first match wins.
constexpr std::array<SuffixRule, 37> kSuffixRules = {{
    {"ically", PosClass::ADV},  {"fully", PosClass::ADV},   {"ously", PosClass::ADV},
    {"ation", PosClass::NOUN},  {"ition", PosClass::NOUN},  {"ments", PosClass::NOUN},
    {"ness", PosClass::NOUN},   {"ment", PosClass::NOUN},   {"tion", PosClass::NOUN},
    {"sion", PosClass::NOUN},   {"cion", PosClass::NOUN},   {"ency", PosClass::NOUN},
    {"ancy", PosClass::NOUN},   {"ence", PosClass::NOUN},   {"ance", PosClass::NOUN},
    {"ship", PosClass::NOUN},   {"hood", PosClass::NOUN},   {"ity", PosClass::NOUN},
    {"itie", PosClass::NOUN},   {"dom", PosClass::NOUN},    {"ism", PosClass::NOUN},
    {"ist", PosClass::NOUN},    {"our", PosClass::NOUN},    {"ure", PosClass::NOUN},
    {"able", PosClass::ADJ},    {"ible", PosClass::ADJ},    {"ical", PosClass::ADJ},
    {"ous", PosClass::ADJ},     {"ful", PosClass::ADJ},     {"ive", PosClass::ADJ},
    {"less", PosClass::ADJ},    {"ish", PosClass::ADJ},     {"ick", PosClass::ADJ},
    {"ize", PosClass::VERB},    {"ise", PosClass::VERB},    {"ify", PosClass::VERB},
    {"ly", PosClass::ADV},
}};

bool contains(std::span<const PosClass> classes, PosClass pos) {
  return std::find(classes.begin(), classes.end(), pos) != classes.end();
}

template <std::size_t N>
bool one_of(std::string_view w, const std::array<std::string_view, N>& set) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

bool is_number(std::string_view w) {
  bool digit = false;
  for (char c : w) {
    if (text::is_ascii_digit(c)) {
      digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit;
}

}  // namespace

BaselineTagger::BaselineTagger()
    : BaselineTagger(EnglishLexicon::builtin(), IrregularForms::builtin()) {}

BaselineTagger::BaselineTagger(const EnglishLexicon& lexicon, const IrregularForms& irregulars)
    : lexicon_(&lexicon), irregulars_(&irregulars), lemmatizer_(lexicon, irregulars) {}

PosClass BaselineTagger::tag(const TagContext& sentence, std::size_t index) const {
  const std::string& word = sentence.normalized[index];
  if (word.empty()) return PosClass::OTHER;
  if (is_number(word)) return PosClass::NUM;

  std::vector<PosClass> classes(lexicon_->classes(word).begin(), lexicon_->classes(word).end());
  for (PosClass pos : irregulars_->classes(word)) {
    if (!contains(classes, pos)) classes.push_back(pos);
  }
  if (!classes.empty()) return disambiguate(classes, sentence, index);
  return guess_unknown(sentence, index);
}

PosClass BaselineTagger::disambiguate(std::span<const PosClass> classes,
                                      const TagContext& sentence, std::size_t index) const {
  if (classes.size() == 1) return classes.front();
  // Attributive use: an adjective reading directly before a noun.
  if (index + 1 < sentence.normalized.size() && contains(classes, PosClass::ADJ)) {
    const auto next = lexicon_->classes(sentence.normalized[index + 1]);
    if (!next.empty() && next.front() == PosClass::NOUN) return PosClass::ADJ;
  }
  if (index == 0) return classes.front();
  const std::string& prev = sentence.normalized[index - 1];
  const auto prev_classes = lexicon_->classes(prev);
  const PosClass prev_first = prev_classes.empty() ? PosClass::OTHER : prev_classes.front();

  if (prev_first == PosClass::DET || one_of(prev, kPossessives)) {
    if (contains(classes, PosClass::NOUN)) return PosClass::NOUN;
    if (contains(classes, PosClass::ADJ)) return PosClass::ADJ;
  }
  if (prev == "to" || prev_first == PosClass::MODAL || one_of(prev, kSubjectPronouns)) {
    if (contains(classes, PosClass::VERB)) return PosClass::VERB;
  }
  if (prev_first == PosClass::ADJ && contains(classes, PosClass::NOUN)) return PosClass::NOUN;
  return classes.front();
}

PosClass BaselineTagger::guess_unknown(const TagContext& sentence, std::size_t index) const {
  const std::string& word = sentence.normalized[index];
  const std::string& prev = index > 0 ? sentence.normalized[index - 1] : std::string();
  if (index > 0 && text::starts_with_upper(sentence.surfaces[index])) return PosClass::NOUN;
  const bool after_det = index > 0 && (lexicon_->has(prev, PosClass::DET) ||
                                       one_of(prev, kPossessives));

  // Inflected forms of listed words.
  if (ends_with(word, "ing") || ends_with(word, "ed") || ends_with(word, "eth")) {
    const std::string base = lemmatizer_.lemmatize(word, PosClass::VERB);
    if (base != word && lexicon_->has(base, PosClass::VERB)) {
      return after_det && ends_with(word, "ing") ? PosClass::NOUN : PosClass::VERB;
    }
  }
  if (ends_with(word, "s")) {
    const std::string noun = lemmatizer_.lemmatize(word, PosClass::NOUN);
    const std::string verb = lemmatizer_.lemmatize(word, PosClass::VERB);
    const bool is_noun = noun != word && lexicon_->has(noun, PosClass::NOUN);
    const bool is_verb = verb != word && lexicon_->has(verb, PosClass::VERB);
    if (is_noun && is_verb) {
      const auto base = lexicon_->classes(noun);
      const bool verb_context = index > 0 && (one_of(prev, kSubjectPronouns));
      return verb_context || base.front() == PosClass::VERB ? PosClass::VERB : PosClass::NOUN;
    }
    if (is_noun) return PosClass::NOUN;
    if (is_verb) return PosClass::VERB;
  }

  for (const SuffixRule& rule : kSuffixRules) {
    if (word.size() > rule.suffix.size() + 2 && ends_with(word, rule.suffix)) return rule.pos;
  }
  if (word.size() > 4 && (ends_with(word, "ed") || ends_with(word, "ing"))) {
    return after_det ? PosClass::NOUN : PosClass::VERB;
  }
  if (word.size() > 4 && ends_with(word, "al")) return PosClass::ADJ;
  return PosClass::NOUN;
}

}  // namespace letternet
