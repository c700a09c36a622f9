#include "letternet/pipeline.h"

#include <array>
#include <utility>

#include "letternet/text.h"

namespace letternet {

std::size_t AnnotatedDoc::token_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences) n += s.size();
  return n;
}

// --- sentence splitting -------------------------------------------------------

namespace {

constexpr std::string_view kRightSingleQuote = "\xE2\x80\x99";
constexpr std::string_view kRightDoubleQuote = "\xE2\x80\x9D";

bool is_terminator(char c, bool colon) {
  return c == '.' || c == '?' || c == '!' || (colon && c == ':');
}

// Length of a closing quote/bracket starting at s[i], or 0.
std::size_t closer_length(std::string_view s, std::size_t i) {
  const char c = s[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  const std::string_view rest = s.substr(i);
  if (rest.starts_with(kRightSingleQuote) || rest.starts_with(kRightDoubleQuote)) return 3;
  return 0;
}

bool is_abbreviation(std::string_view text, std::size_t dot, const SplitConfig& cfg) {
  std::size_t start = dot;
  while (start > 0 && text::is_ascii_alpha(text[start - 1])) --start;
  const std::string_view word = text.substr(start, dot - start);
  if (word.empty()) return false;
  if (word.size() == 1 && text::is_ascii_upper(word[0]) && word[0] != 'I') return true;
  return cfg.abbreviations.contains(text::to_lower(word));
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text, const SplitConfig& cfg) {
  std::vector<std::string> out;
  auto emit = [&](std::size_t from, std::size_t to) {
    const std::string_view piece = text::trim(text.substr(from, to - from));
    if (!piece.empty()) out.emplace_back(piece);
  };

  std::size_t start = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (!is_terminator(text[i], cfg.colon_boundary)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && is_terminator(text[j], false)) ++j;
    while (j < n) {
      const std::size_t len = closer_length(text, j);
      if (len == 0) break;
      j += len;
    }
    const bool at_break = j == n || text::is_ascii_space(text[j]);
    const bool single_dot = text[i] == '.' && j == i + 1;
    if (at_break && !(single_dot && is_abbreviation(text, i, cfg))) {
      emit(start, j);
      start = j;
    }
    i = j;
  }
  emit(start, n);
  return out;
}

// --- tokenization -------------------------------------------------------------

namespace {

enum class CharClass { kSpace, kWord, kPunct };

std::size_t code_point_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

constexpr std::array<std::string_view, 11> kUnicodePunct = {
    "\xE2\x80\x98", "\xE2\x80\x99", "\xE2\x80\x9C", "\xE2\x80\x9D", "\xE2\x80\x93",
    "\xE2\x80\x94", "\xE2\x80\xA6", "\xC2\xB6",     "\xC2\xA7",     "\xC2\xAB",
    "\xC2\xBB"};

CharClass classify(std::string_view cp) {
  const auto lead = static_cast<unsigned char>(cp[0]);
  if (lead < 0x80) {
    const char c = cp[0];
    if (text::is_ascii_space(c)) return CharClass::kSpace;
    if (text::is_ascii_alpha(c) || text::is_ascii_digit(c)) return CharClass::kWord;
    return CharClass::kPunct;
  }
  for (std::string_view p : kUnicodePunct) {
    if (cp == p) return CharClass::kPunct;
  }
  return CharClass::kWord;
}

bool is_apostrophe(std::string_view cp) { return cp == "'" || cp == kRightSingleQuote; }

}  // namespace

std::vector<std::string> tokenize(std::string_view sentence) {
  // Split into code points first so look-ahead is simple.
  std::vector<std::string_view> cps;
  for (std::size_t i = 0; i < sentence.size();) {
    const std::size_t len =
        std::min(code_point_length(static_cast<unsigned char>(sentence[i])), sentence.size() - i);
    cps.push_back(sentence.substr(i, len));
    i += len;
  }

  std::vector<std::string> tokens;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) tokens.push_back(std::move(word));
    word.clear();
  };
  auto is_word = [&](std::size_t k) { return k < cps.size() && classify(cps[k]) == CharClass::kWord; };
  auto is_digit = [&](std::size_t k) {
    return k < cps.size() && cps[k].size() == 1 && text::is_ascii_digit(cps[k][0]);
  };

  for (std::size_t k = 0; k < cps.size(); ++k) {
    const std::string_view cp = cps[k];
    switch (classify(cp)) {
      case CharClass::kSpace:
        flush();
        break;
      case CharClass::kWord:
        word.append(cp);
        break;
      case CharClass::kPunct: {
        const bool joins_word = (is_apostrophe(cp) || cp == "-") && !word.empty() &&
                                is_word(k - 1) && is_word(k + 1);
        const bool joins_number = (cp == "." || cp == ",") && !word.empty() && is_digit(k - 1) &&
                                  is_digit(k + 1);
        if (joins_word || joins_number) {
          word.append(cp);
          break;
        }
        flush();
        std::string punct(cp);
        while (k + 1 < cps.size() && cps[k + 1] == cp) {
          punct.append(cp);
          ++k;
        }
        tokens.push_back(std::move(punct));
        break;
      }
    }
  }
  flush();
  return tokens;
}

// --- normalization --------------------------------------------------------------

namespace {

// Listed, irregular, or a regular inflection of a listed word.
bool known_word(std::string_view w, const EnglishLexicon& lexicon,
                const IrregularForms& irregulars) {
  if (lexicon.known(w) || !irregulars.classes(w).empty()) return true;
  const Lemmatizer lemmatizer(lexicon, irregulars);
  for (PosClass pos : {PosClass::NOUN, PosClass::VERB}) {
    const std::string lemma = lemmatizer.lemmatize(w, pos);
    if (lemma != w && lexicon.has(lemma, pos)) return true;
  }
  return false;
}

// Early Modern u/v usage: initial v before a consonant is u (vse, vnto), u
// between vowels is v (moue, haue, euer).
std::string swap_uv(std::string w) {
  const auto consonant = [](char c) { return text::is_ascii_alpha(c) && !text::is_vowel(c); };
  if (w.size() > 1 && w[0] == 'v' && consonant(w[1]) && w[1] != 'y') w[0] = 'u';
  for (std::size_t k = 1; k + 1 < w.size(); ++k) {
    if (w[k] == 'u' && text::is_vowel(w[k - 1]) && text::is_vowel(w[k + 1])) w[k] = 'v';
  }
  return w;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

// Respellings that are only trusted when they produce a known word.
std::vector<std::string> gated_respellings(const std::string& w) {
  std::vector<std::string> out;
  const std::size_t n = w.size();
  if (n > 1 && w[0] == 'i' && text::is_vowel(w[1])) out.push_back("j" + w.substr(1));
  if (n > 3 && w.back() == 'e') out.push_back(w.substr(0, n - 1));
  if (n > 3 && text::ends_with(w, "ll")) out.push_back(w.substr(0, n - 1));
  if (n > 4 && text::ends_with(w, "lle")) out.push_back(w.substr(0, n - 2));
  if (n > 3 && text::ends_with(w, "ie")) out.push_back(w.substr(0, n - 2) + "y");
  if (w.find("cion") != std::string::npos) out.push_back(replace_all(w, "cion", "tion"));
  if (w.find("our") != std::string::npos) out.push_back(replace_all(w, "our", "or"));
  {
    // u for v after a consonant: seruant, serue.
    std::string v = w;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      if (v[k] == 'u' && text::is_ascii_alpha(v[k - 1]) && !text::is_vowel(v[k - 1]) &&
          v[k - 1] != 'q' && v[k - 1] != 'g' && text::is_vowel(v[k + 1])) {
        v[k] = 'v';
      }
    }
    if (v != w) out.push_back(v);
  }
  if (n > 2 && w.find('y') != std::string::npos) {
    std::string iy = w;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      const auto consonant = [](char c) { return text::is_ascii_alpha(c) && !text::is_vowel(c); };
      if (iy[k] == 'y' && consonant(iy[k - 1]) && consonant(iy[k + 1])) iy[k] = 'i';
    }
    if (iy != w) out.push_back(iy);
  }
  return out;
}

}  // namespace

std::string normalize_spelling(std::string_view lower, const VariantLexicon& variants,
                               const EnglishLexicon& lexicon, const IrregularForms& irregulars) {
  if (const VariantEntry* entry = variants.find(lower)) return entry->normalized;
  std::string w = text::to_lower(lower);
  if (known_word(w, lexicon, irregulars)) return w;

  w = replace_all(std::move(w), "\xC5\xBF", "s");  // long s
  w = swap_uv(std::move(w));
  if (const VariantEntry* entry = variants.find(w)) return entry->normalized;
  if (known_word(w, lexicon, irregulars)) return w;

  for (const std::string& candidate : gated_respellings(w)) {
    if (known_word(candidate, lexicon, irregulars)) return candidate;
  }
  return w;
}

// --- tagging --------------------------------------------------------------------

namespace {

bool is_punctuation_token(std::string_view surface) {
  if (surface.empty()) return false;
  for (std::size_t i = 0; i < surface.size();) {
    const std::size_t len =
        std::min(code_point_length(static_cast<unsigned char>(surface[i])), surface.size() - i);
    if (classify(surface.substr(i, len)) != CharClass::kPunct) return false;
    i += len;
  }
  return surface != "&";
}

}  // namespace

std::vector<Token> normalize_and_tag(std::span<const std::string> surfaces,
                                     const VariantLexicon& variants, const Tagger& tagger,
                                     std::size_t sent_idx, Diagnostics* diag) {
  static const Lemmatizer kLemmatizer;
  const std::size_t n = surfaces.size();
  std::vector<std::string> normalized(n);
  std::vector<const VariantEntry*> entries(n, nullptr);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& s = surfaces[i];
    if (s == "&") {
      normalized[i] = "and";
    } else if (is_punctuation_token(s)) {
      normalized[i] = s;
    } else {
      const std::string lower = text::to_lower(s);
      entries[i] = variants.find(lower);
      normalized[i] = normalize_spelling(lower, variants);
    }
  }

  const TagContext context{surfaces, normalized};
  std::vector<Token> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Token token;
    token.surface = surfaces[i];
    token.normalized = normalized[i];
    token.sent_idx = sent_idx;
    token.tok_idx = i;
    const VariantEntry* entry = entries[i];
    if (surfaces[i] == "&") {
      token.pos = PosClass::CONJ;
    } else if (is_punctuation_token(surfaces[i])) {
      token.pos = PosClass::PUNCT;
    } else if (entry != nullptr && entry->pos) {
      token.pos = *entry->pos;
    } else {
      try {
        token.pos = tagger.tag(context, i);
      } catch (const std::exception& e) {
        token.pos = PosClass::OTHER;
        warn(diag, "tagger failed on '" + surfaces[i] + "' (sentence " +
                       std::to_string(sent_idx) + ", token " + std::to_string(i) +
                       "): " + e.what());
      }
    }
    if (token.pos == PosClass::PUNCT) {
      token.lemma = token.normalized;
    } else if (entry != nullptr && entry->lemma) {
      token.lemma = *entry->lemma;
    } else {
      token.lemma = kLemmatizer.lemmatize(token.normalized, token.pos);
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

// --- Pipeline -------------------------------------------------------------------

Pipeline::Pipeline()
    : Pipeline(VariantLexicon::builtin(), std::make_shared<BaselineTagger>(), PipelineConfig{}) {}

Pipeline::Pipeline(VariantLexicon variants, std::shared_ptr<const Tagger> tagger,
                   PipelineConfig cfg)
    : variants_(std::move(variants)), tagger_(std::move(tagger)), cfg_(std::move(cfg)) {
  if (!tagger_) tagger_ = std::make_shared<BaselineTagger>();
}

AnnotatedDoc Pipeline::annotate(std::string_view letter_id, std::string_view text,
                                Diagnostics* diag) const {
  AnnotatedDoc doc;
  doc.letter_id = std::string(letter_id);
  for (const std::string& sentence : split_sentences(text, cfg_.split)) {
    const std::vector<std::string> surfaces = tokenize(sentence);
    if (surfaces.empty()) continue;
    doc.sentences.push_back(
        normalize_and_tag(surfaces, variants_, *tagger_, doc.sentences.size(), diag));
  }
  return doc;
}

}  // namespace letternet
