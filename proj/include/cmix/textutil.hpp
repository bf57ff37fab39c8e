#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cmix {

// Byte offsets of each UTF-8 codepoint start, plus a final entry equal to
// s.size(). Malformed bytes are treated as single-byte codepoints.
std::vector<size_t> utf8_boundaries(std::string_view s);

// Decodes the codepoint starting at byte offset `pos`; malformed sequences
// decode as the single byte value.
uint32_t utf8_decode(std::string_view s, size_t pos);

size_t utf8_length(std::string_view s);

// Punctuation set used for token stripping and corpus statistics: ASCII
// punctuation plus the common Unicode marks seen in tweets (general
// punctuation block, danda, inverted marks, CJK stops). Not a full Unicode
// category table.
bool is_punct_codepoint(uint32_t cp);

// True if every codepoint of the (non-empty) string is punctuation.
bool is_all_punct(std::string_view s);

// ASCII lowercase; non-ASCII bytes pass through. The corpus is Latin-script
// transliteration, so this is the whole casing story.
std::string to_lower(std::string_view s);

bool has_ascii_upper(std::string_view s);

// Removes leading and trailing punctuation codepoints ('#' included).
std::string strip_edge_punct(std::string_view s);

// Splits on runs of ASCII whitespace.
std::vector<std::string> split_whitespace(std::string_view s);

bool starts_with_ci(std::string_view s, std::string_view prefix);

}  // namespace cmix
