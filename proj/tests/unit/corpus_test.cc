#include <gtest/gtest.h>

#include <random>

#include "letternet/corpus.h"
#include "test_support.h"

namespace letternet {
namespace {

using testing::data_dir;
using testing::slurp;
using testing::spit;
using testing::TempDir;

// Hand removal of <...> and [...] spans followed by whitespace collapsing,
// written without the library's helpers.
std::string hand_clean(const std::string& raw) {
  std::string kept;
  char skip_until = 0;
  for (char c : raw) {
    if (skip_until != 0) {
      if (c == skip_until) skip_until = 0;
      continue;
    }
    if (c == '<') {
      skip_until = '>';
    } else if (c == '[') {
      skip_until = ']';
    } else {
      kept += c;
    }
  }
  std::string out;
  for (char c : kept) {
    const bool space = c == ' ' || c == '\n' || c == '\t' || c == '\r';
    if (space) {
      if (!out.empty() && out.back() != ' ') out += ' ';
    } else {
      out += c;
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<ManifestEntry> fixture_manifest() {
  return load_manifest(data_dir() / "manifest.tsv");
}

TEST(CleanText, StripsTags) {
  EXPECT_EQ(clean_text("a <i>Tutour</i> must vse"), "a Tutour must vse");
}

TEST(CleanText, RemovesEditorialNotes) {
  EXPECT_EQ(clean_text("little Children [\\ldots] to a Custome"), "little Children to a Custome");
}

TEST(CleanText, KeepsCleanText) {
  EXPECT_EQ(clean_text("already clean text"), "already clean text");
}

TEST(CleanText, MatchesHandRemovalOnFixtureLetter) {
  const std::string raw = slurp(data_dir() / "corpus" / "dury_hartlib_1628.txt");
  EXPECT_EQ(clean_text(raw), hand_clean(raw));
}

TEST(CleanText, UnbalancedBracketIsKeptWithWarning) {
  Diagnostics diag;
  EXPECT_EQ(clean_text("a [torn passage", {}, &diag), "a [torn passage");
  ASSERT_EQ(diag.warnings().size(), 1u);
}

TEST(CleanText, NestedBracketsAreFlaggedNotGuessed) {
  Diagnostics diag;
  EXPECT_EQ(clean_text("x [a [b] c] y", {}, &diag), "x [a [b] c] y");
  EXPECT_FALSE(diag.empty());
}

TEST(CleanText, RejoinsHyphenationWhenAsked) {
  CleaningConfig cfg;
  EXPECT_EQ(clean_text("consi-\nderation", cfg), "consi- deration");
  cfg.rejoin_hyphenation = true;
  EXPECT_EQ(clean_text("consi-\nderation", cfg), "consideration");
}

TEST(CleanText, IsIdempotentOnRandomInput) {
  std::mt19937 rng(1628);
  const std::string alphabet = "ab <>[]/\n\t-.";
  std::uniform_int_distribution<std::size_t> len(0, 40);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (std::size_t n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
    for (bool rejoin : {false, true}) {
      CleaningConfig cfg;
      cfg.rejoin_hyphenation = rejoin;
      const std::string once = clean_text(s, cfg);
      EXPECT_EQ(clean_text(once, cfg), once) << "input: " << s;
    }
  }
}

TEST(LoadLetter, FixtureLetterStartsWithExample) {
  LetterMeta meta{"L01", "Dury", "Hartlib", 1628, true, "en", std::nullopt};
  const Letter letter = load_letter(data_dir() / "corpus" / "dury_hartlib_1628.txt", meta);
  EXPECT_TRUE(letter.clean_text.starts_with("I begin to shew")) << letter.clean_text;
  EXPECT_EQ(letter.meta.sender, "Dury");
  EXPECT_TRUE(letter.meta.year_uncertain);
}

TEST(LoadLetter, EmptyFileWarns) {
  TempDir dir;
  spit(dir / "empty.txt", "");
  Diagnostics diag;
  const Letter letter = load_letter(dir / "empty.txt", {.id = "E"}, {}, &diag);
  EXPECT_TRUE(letter.clean_text.empty());
  EXPECT_FALSE(diag.empty());
}

TEST(LoadLetter, MissingFileNamesThePath) {
  try {
    load_letter("/nonexistent/letter.txt", {.id = "X"});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/letter.txt"), std::string::npos);
  }
}

TEST(LoadLetter, InvalidUtf8ReportsOffset) {
  TempDir dir;
  spit(dir / "bad.txt", std::string("abc\xff" "def"));
  try {
    load_letter(dir / "bad.txt", {.id = "B"});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
  }
}

TEST(LoadLetter, DoesNotModifySource) {
  const auto path = data_dir() / "corpus" / "dury_st_amand_1637.txt";
  const std::string before = slurp(path);
  load_letter(path, {.id = "L05"});
  EXPECT_EQ(slurp(path), before);
}

TEST(LetterMeta, RejectsYearOutsideRange) {
  EXPECT_THROW(validate_meta({.id = "a", .year = 1399}), Error);
  EXPECT_THROW(validate_meta({.id = "a", .year = 1901}), Error);
  EXPECT_THROW(validate_meta({.id = ""}), Error);
  EXPECT_NO_THROW(validate_meta({.id = "a", .year = 1900}));
}

TEST(Manifest, ParsesFixture) {
  const auto entries = fixture_manifest();
  ASSERT_EQ(entries.size(), 13u);
  EXPECT_EQ(entries[0].meta.id, "L01");
  EXPECT_EQ(entries[0].meta.year, 1628);
  EXPECT_TRUE(entries[0].meta.year_uncertain);
  EXPECT_EQ(entries[0].meta.cut_marker, "=== Nachschrift ===");
  EXPECT_FALSE(entries[6].meta.addressee.has_value());
  EXPECT_EQ(entries[4].meta.addressee, "St Amand");
}

TEST(Manifest, RejectsDuplicateIds) {
  const std::string text = "id\tsender\tpath\nA\tx\ta.txt\nA\ty\tb.txt\n";
  EXPECT_THROW(parse_manifest(text, ".", "m"), Error);
}

TEST(Manifest, RequiresHeaderColumns) {
  EXPECT_THROW(parse_manifest("id\tsender\nA\tx\n", ".", "m"), Error);
}

TEST(Manifest, RejectsBadYear) {
  EXPECT_THROW(parse_manifest("id\tsender\tyear\tpath\nA\tx\t16x\ta\n", ".", "m"), Error);
}

TEST(Corpus, CutMarkerExcludesTrailingText) {
  const Corpus corpus = load_corpus(fixture_manifest());
  const Letter* l01 = corpus.find("L01");
  ASSERT_NE(l01, nullptr);
  EXPECT_NE(l01->clean_text.find("Ich habe"), std::string::npos);
  EXPECT_EQ(l01->analysis_text().find("Ich habe"), std::string::npos);
  EXPECT_TRUE(l01->analysis_text().ends_with("John Dury."));
}

TEST(Corpus, RejectsDuplicateLetter) {
  Corpus corpus;
  corpus.add(Letter{{.id = "A"}, "", ""});
  EXPECT_THROW(corpus.add(Letter{{.id = "A"}, "", ""}), Error);
}

TEST(FilterCorpus, SenderDury) {
  const Corpus corpus = load_corpus(fixture_manifest());
  EXPECT_EQ(filter_corpus(corpus, sender_is("Dury")).size(), 6u);
}

TEST(FilterCorpus, AlwaysTrueIsIdentity) {
  const Corpus corpus = load_corpus(fixture_manifest());
  const Corpus all = filter_corpus(corpus, [](const LetterMeta&) { return true; });
  ASSERT_EQ(all.size(), corpus.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all.letters()[i].meta.id, corpus.letters()[i].meta.id);
  }
}

TEST(FilterCorpus, Year1628) {
  const Corpus corpus = load_corpus(fixture_manifest());
  const Corpus c = filter_corpus(corpus, year_is(1628));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.letters()[0].meta.id, "L01");
  EXPECT_EQ(c.letters()[0].meta.addressee, "Hartlib");
}

TEST(FilterCorpus, CompositionEqualsConjunction) {
  const Corpus corpus = load_corpus(fixture_manifest());
  const std::vector<LetterPredicate> preds = {sender_is("Hartlib"), year_between(1640, 1660),
                                              addressee_is("Worthington")};
  for (std::size_t i = 0; i < preds.size(); ++i) {
    for (std::size_t j = 0; j < preds.size(); ++j) {
      const Corpus chained = filter_corpus(filter_corpus(corpus, preds[i]), preds[j]);
      const Corpus joined = filter_corpus(corpus, all_of({preds[i], preds[j]}));
      ASSERT_EQ(chained.size(), joined.size());
      for (std::size_t k = 0; k < chained.size(); ++k) {
        EXPECT_EQ(chained.letters()[k].meta.id, joined.letters()[k].meta.id);
      }
    }
  }
  EXPECT_EQ(filter_corpus(corpus, all_of(preds)).size(), 2u);
}

}  // namespace
}  // namespace letternet
