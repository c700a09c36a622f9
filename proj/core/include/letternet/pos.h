#ifndef LETTERNET_POS_H_
#define LETTERNET_POS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace letternet {

// Coarse part-of-speech classes. MODAL is kept apart from VERB so that
// auxiliaries such as "must" never anchor a subject/object relation.
enum class PosClass : std::uint8_t {
  NOUN,
  VERB,
  ADJ,
  ADV,
  PRON,
  MODAL,
  DET,
  PREP,
  CONJ,
  NUM,
  PUNCT,
  OTHER,
};

inline constexpr std::array<PosClass, 12> kAllPosClasses = {
    PosClass::NOUN, PosClass::VERB, PosClass::ADJ,  PosClass::ADV,
    PosClass::PRON, PosClass::MODAL, PosClass::DET, PosClass::PREP,
    PosClass::CONJ, PosClass::NUM,  PosClass::PUNCT, PosClass::OTHER};

std::string_view pos_label(PosClass pos);

// Accepts the labels produced by pos_label (any case) and the common Penn
// Treebank tags (NN, VBD, JJ, MD, ...), so output of external taggers can be
// ingested after a column rename.
std::optional<PosClass> parse_pos(std::string_view label);

}  // namespace letternet

#endif  // LETTERNET_POS_H_
