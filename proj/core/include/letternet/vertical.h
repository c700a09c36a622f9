#ifndef LETTERNET_VERTICAL_H_
#define LETTERNET_VERTICAL_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "letternet/diagnostics.h"
#include "letternet/pipeline.h"

// Vertical ("one token per line") format shared with external taggers:
//
//   surface <TAB> normalized <TAB> lemma <TAB> pos
//
// A blank line ends a sentence; lines starting with '#' are comments, except
// that "# letter: ID" names the document.
namespace letternet {

// Throws Error "<source>:<line>: ..." on a line without exactly four columns
// or with an empty column. Unknown pos labels become OTHER with a warning.
// The document id comes from `letter_id`, else a "# letter:" comment, else
// empty.
AnnotatedDoc parse_pretagged(std::string_view contents, std::string_view source_name,
                             std::optional<std::string> letter_id = std::nullopt,
                             Diagnostics* diag = nullptr);

// As above; the id defaults to a "# letter:" comment, then the file stem.
AnnotatedDoc ingest_pretagged(const std::filesystem::path& path,
                              std::optional<std::string> letter_id = std::nullopt,
                              Diagnostics* diag = nullptr);

std::string to_vertical(const AnnotatedDoc& doc);

}  // namespace letternet

#endif  // LETTERNET_VERTICAL_H_
