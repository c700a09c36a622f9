#ifndef LETTERNET_TEXT_H_
#define LETTERNET_TEXT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Byte-level string helpers. Text is UTF-8 throughout; only ASCII letters are
// case-folded, other code points pass through untouched.
namespace letternet::text {

// Byte offset of the first malformed UTF-8 sequence, or nullopt if `s` is
// valid. Overlong encodings and surrogates count as malformed.
std::optional<std::size_t> find_invalid_utf8(std::string_view s);

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

// Splits on `sep`, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);

bool is_ascii_space(char c);
bool is_ascii_alpha(char c);
bool is_ascii_digit(char c);
bool is_ascii_upper(char c);
bool is_vowel(char c);

bool starts_with_upper(std::string_view s);
bool all_digits(std::string_view s);
bool ends_with(std::string_view s, std::string_view suffix);

}  // namespace letternet::text

#endif  // LETTERNET_TEXT_H_
