#ifndef LETTERNET_EMBEDDED_DATA_H_
#define LETTERNET_EMBEDDED_DATA_H_

#include <string_view>

// Contents of the files under core/data, compiled in.
namespace letternet::embedded {

std::string_view variant_lexicon();
std::string_view english_lexicon();
std::string_view irregular_forms();
std::string_view abbreviations();

}  // namespace letternet::embedded

#endif  // LETTERNET_EMBEDDED_DATA_H_
