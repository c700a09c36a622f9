#include "letternet/lemmatizer.h"

#include <initializer_list>

#include "letternet/text.h"

namespace letternet {

namespace {

using text::ends_with;

bool has_vowel(std::string_view s) {
  for (char c : s) {
    if (text::is_vowel(c) || c == 'y') return true;
  }
  return false;
}

bool is_consonant(char c) { return text::is_ascii_alpha(c) && !text::is_vowel(c); }

bool doubled_consonant(std::string_view s) {
  return s.size() >= 3 && s[s.size() - 1] == s[s.size() - 2] && is_consonant(s.back());
}

bool sibilant_end(std::string_view s) {
  return ends_with(s, "s") || ends_with(s, "x") || ends_with(s, "z") || ends_with(s, "ch") ||
         ends_with(s, "sh");
}

// Whether a stem left by removing -ed/-ing/-eth most likely lost a final
// silent e: mov(e)d, caus(e)d, judg(e)d, translat(e)d, nam(e)d.
bool needs_e(std::string_view stem) {
  const std::size_t n = stem.size();
  if (n < 2) return false;
  const char last = stem[n - 1];
  const char prev = stem[n - 2];
  if (last == 'v' || last == 'u' || last == 'z' || last == 'c') return true;
  if (ends_with(stem, "dg")) return true;
  if (last == 's' && text::is_vowel(prev)) return true;
  if (n >= 3 && last == 'r' && (prev == 'a' || prev == 'i' || prev == 'o' || prev == 'u') &&
      is_consonant(stem[n - 3])) {
    return true;
  }
  if (n >= 4 && (ends_with(stem, "at") || ends_with(stem, "ut")) && is_consonant(stem[n - 3])) {
    return true;
  }
  return n == 3 && is_consonant(stem[0]) && text::is_vowel(stem[1]) && is_consonant(last) &&
         last != 'w' && last != 'x' && last != 'y';
}

std::string undouble(std::string_view s) { return std::string(s.substr(0, s.size() - 1)); }

// Double l/s/z/f are usually part of the base ("called", "passed").
bool undoubles(std::string_view stem) {
  if (!doubled_consonant(stem)) return false;
  const char c = stem.back();
  return c != 'l' && c != 's' && c != 'z' && c != 'f';
}

// Stem guess for an unknown verb once -ed/-ing/-eth is removed.
std::string verb_stem_heuristic(std::string_view stem) {
  if (undoubles(stem)) return undouble(stem);
  if (needs_e(stem)) return std::string(stem) + "e";
  return std::string(stem);
}

}  // namespace

Lemmatizer::Lemmatizer() : Lemmatizer(EnglishLexicon::builtin(), IrregularForms::builtin()) {}

Lemmatizer::Lemmatizer(const EnglishLexicon& lexicon, const IrregularForms& irregulars)
    : lexicon_(&lexicon), irregulars_(&irregulars) {}

bool Lemmatizer::known_as(std::string_view word, PosClass pos) const {
  return lexicon_->has(word, pos);
}

std::string Lemmatizer::lemmatize(std::string_view normalized, PosClass pos) const {
  std::string current = text::to_lower(normalized);
  if (pos != PosClass::NOUN && pos != PosClass::VERB) return current;
  // Every changing step shortens the word or lands on a listed base form, so
  // this reaches a fixed point; the bound is only a backstop.
  for (int i = 0; i < 64; ++i) {
    std::string next = step(current, pos);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::string Lemmatizer::step(const std::string& word, PosClass pos) const {
  if (const std::string* lemma = irregulars_->find(word, pos)) return *lemma;
  if (known_as(word, pos)) return word;

  const std::size_t n = word.size();
  // First candidate that is a known form of this class, else the fallback.
  auto choose = [&](std::initializer_list<std::string> candidates, std::string fallback) {
    for (const std::string& c : candidates) {
      if (c.size() >= 2 && (known_as(c, pos) || irregulars_->find(c, pos) != nullptr)) return c;
    }
    return fallback;
  };

  if (pos == PosClass::NOUN) {
    if (ends_with(word, "'s") || ends_with(word, "\xE2\x80\x99s")) {
      return word.substr(0, word.size() - (word[n - 2] == '\'' ? 2 : 4));
    }
    if (ends_with(word, "s'")) return word.substr(0, n - 1);
    if (n <= 3 || ends_with(word, "ss") || ends_with(word, "us") || ends_with(word, "is")) {
      return word;
    }
    if (ends_with(word, "ies") && n > 4) {
      const std::string y = word.substr(0, n - 3) + "y";
      return choose({y}, y);
    }
    if (ends_with(word, "ves") && n > 4) {
      const std::string stem = word.substr(0, n - 3);
      return choose({stem + "f", stem + "fe", word.substr(0, n - 1)}, word.substr(0, n - 1));
    }
    if (ends_with(word, "es")) {
      const std::string stem = word.substr(0, n - 2);
      return choose({stem, word.substr(0, n - 1)},
                    sibilant_end(stem) ? stem : word.substr(0, n - 1));
    }
    if (ends_with(word, "s")) return word.substr(0, n - 1);
    return word;
  }

  // VERB
  if (n <= 3) return word;
  if (ends_with(word, "ies") || ends_with(word, "ied")) {
    if (n > 4) {
      const std::string y = word.substr(0, n - 3) + "y";
      return choose({y}, y);
    }
    return word;
  }
  if (ends_with(word, "eth") && n > 4) {
    const std::string stem = word.substr(0, n - 3);
    if (!has_vowel(stem)) return word;
    return choose({stem, stem + "e"}, verb_stem_heuristic(stem));
  }
  if (ends_with(word, "ing") && n > 4) {
    const std::string stem = word.substr(0, n - 3);
    if (!has_vowel(stem)) return word;
    return choose({stem, stem + "e", doubled_consonant(stem) ? undouble(stem) : stem},
                  stem.size() >= 3 ? verb_stem_heuristic(stem) : word);
  }
  if (ends_with(word, "eed")) {
    return choose({word.substr(0, n - 1)}, word);
  }
  if (ends_with(word, "ed")) {
    const std::string stem = word.substr(0, n - 2);
    if (!has_vowel(stem)) return word;
    return choose({stem, word.substr(0, n - 1), doubled_consonant(stem) ? undouble(stem) : stem},
                  stem.size() >= 3 ? verb_stem_heuristic(stem) : word);
  }
  if (ends_with(word, "es")) {
    const std::string stem = word.substr(0, n - 2);
    return choose({stem, word.substr(0, n - 1)},
                  sibilant_end(stem) || ends_with(stem, "o") ? stem : word.substr(0, n - 1));
  }
  if (ends_with(word, "s") && !ends_with(word, "ss") && !ends_with(word, "us") &&
      !ends_with(word, "is")) {
    return word.substr(0, n - 1);
  }
  return word;
}

std::string lemmatize(std::string_view normalized, PosClass pos) {
  static const Lemmatizer kLemmatizer;
  return kLemmatizer.lemmatize(normalized, pos);
}

}  // namespace letternet
