#include "letternet/pos.h"

#include <string>

#include "letternet/text.h"

namespace letternet {

std::string_view pos_label(PosClass pos) {
  switch (pos) {
    case PosClass::NOUN: return "NOUN";
    case PosClass::VERB: return "VERB";
    case PosClass::ADJ: return "ADJ";
    case PosClass::ADV: return "ADV";
    case PosClass::PRON: return "PRON";
    case PosClass::MODAL: return "MODAL";
    case PosClass::DET: return "DET";
    case PosClass::PREP: return "PREP";
    case PosClass::CONJ: return "CONJ";
    case PosClass::NUM: return "NUM";
    case PosClass::PUNCT: return "PUNCT";
    case PosClass::OTHER: return "OTHER";
  }
  return "OTHER";
}

namespace {

std::optional<PosClass> parse_penn(std::string_view tag) {
  using text::ends_with;
  if (tag.starts_with("NN")) return PosClass::NOUN;
  if (tag.starts_with("VB")) return PosClass::VERB;
  if (tag.starts_with("JJ")) return PosClass::ADJ;
  if (tag.starts_with("RB") || tag == "WRB") return PosClass::ADV;
  if (tag == "PRP" || tag == "PRP$" || tag == "WP" || tag == "WP$" || tag == "EX") {
    return PosClass::PRON;
  }
  if (tag == "MD") return PosClass::MODAL;
  if (tag == "DT" || tag == "PDT" || tag == "WDT") return PosClass::DET;
  if (tag == "IN" || tag == "TO" || tag == "RP") return PosClass::PREP;
  if (tag == "CC") return PosClass::CONJ;
  if (tag == "CD") return PosClass::NUM;
  if (tag == "." || tag == "," || tag == ":" || tag == "``" || tag == "''" ||
      tag == "-LRB-" || tag == "-RRB-" || tag == "HYPH" || tag == "#" || tag == "$") {
    return PosClass::PUNCT;
  }
  if (tag == "FW" || tag == "SYM" || tag == "UH" || tag == "LS" || tag == "POS") {
    return PosClass::OTHER;
  }
  return std::nullopt;
}

}  // namespace

std::optional<PosClass> parse_pos(std::string_view label) {
  std::string upper(label);
  for (char& c : upper) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  for (PosClass pos : kAllPosClasses) {
    if (upper == pos_label(pos)) return pos;
  }
  // Penn tags are case-sensitive upper case; "in" is not IN.
  return parse_penn(label);
}

}  // namespace letternet
