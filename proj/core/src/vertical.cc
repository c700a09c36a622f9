#include "letternet/vertical.h"

#include "letternet/io.h"
#include "letternet/text.h"

namespace letternet {

AnnotatedDoc parse_pretagged(std::string_view contents, std::string_view source_name,
                             std::optional<std::string> letter_id, Diagnostics* diag) {
  AnnotatedDoc doc;
  std::optional<std::string> declared_id;
  Sentence current;
  auto close_sentence = [&] {
    if (current.empty()) return;
    doc.sentences.push_back(std::move(current));
    current.clear();
  };

  std::size_t line_no = 0;
  for (std::string_view line : text::split(contents, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
    if (line.starts_with('#')) {
      const std::string_view comment = text::trim(line.substr(1));
      if (comment.starts_with("letter:")) {
        declared_id = std::string(text::trim(comment.substr(7)));
      }
      continue;
    }
    if (text::trim(line).empty()) {
      close_sentence();
      continue;
    }
    const auto fields = text::split(line, '\t');
    if (fields.size() != 4) {
      throw Error(where + ": expected 4 tab-separated columns, got " +
                  std::to_string(fields.size()));
    }
    for (std::string_view f : fields) {
      if (f.empty()) throw Error(where + ": empty column");
    }
    Token token;
    token.surface = std::string(fields[0]);
    token.normalized = std::string(fields[1]);
    token.lemma = std::string(fields[2]);
    if (auto pos = parse_pos(fields[3])) {
      token.pos = *pos;
    } else {
      token.pos = PosClass::OTHER;
      warn(diag, where + ": unknown part of speech '" + std::string(fields[3]) + "', using OTHER");
    }
    token.sent_idx = doc.sentences.size();
    token.tok_idx = current.size();
    current.push_back(std::move(token));
  }
  close_sentence();
  doc.letter_id = letter_id ? *letter_id : declared_id.value_or("");
  return doc;
}

AnnotatedDoc ingest_pretagged(const std::filesystem::path& path,
                              std::optional<std::string> letter_id, Diagnostics* diag) {
  const std::string contents = io::read_file(path);
  if (auto bad = text::find_invalid_utf8(contents)) {
    throw Error(path.string() + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  AnnotatedDoc doc = parse_pretagged(contents, path.string(), std::move(letter_id), diag);
  if (doc.letter_id.empty()) doc.letter_id = path.stem().string();
  return doc;
}

std::string to_vertical(const AnnotatedDoc& doc) {
  std::string out = "# letter: " + doc.letter_id + "\n";
  for (const Sentence& sentence : doc.sentences) {
    for (const Token& t : sentence) {
      out += t.surface;
      out += '\t';
      out += t.normalized;
      out += '\t';
      out += t.lemma;
      out += '\t';
      out += pos_label(t.pos);
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

}  // namespace letternet
