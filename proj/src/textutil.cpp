#include "cmix/textutil.hpp"

#include <cctype>

namespace cmix {

std::vector<size_t> utf8_boundaries(std::string_view s) {
  std::vector<size_t> out;
  size_t i = 0;
  while (i < s.size()) {
    out.push_back(i);
    unsigned char c = s[i];
    size_t len = 1;
    if ((c & 0x80) == 0x00) len = 1;
    else if ((c & 0xe0) == 0xc0) len = 2;
    else if ((c & 0xf0) == 0xe0) len = 3;
    else if ((c & 0xf8) == 0xf0) len = 4;
    // Do not run past the end or across a byte that is not a continuation.
    size_t j = i + 1;
    while (j < i + len && j < s.size() && (static_cast<unsigned char>(s[j]) & 0xc0) == 0x80) ++j;
    i = j;
  }
  out.push_back(s.size());
  return out;
}

uint32_t utf8_decode(std::string_view s, size_t pos) {
  unsigned char c = s[pos];
  if ((c & 0x80) == 0x00) return c;
  uint32_t cp = 0;
  size_t len = 0;
  if ((c & 0xe0) == 0xc0) { cp = c & 0x1f; len = 2; }
  else if ((c & 0xf0) == 0xe0) { cp = c & 0x0f; len = 3; }
  else if ((c & 0xf8) == 0xf0) { cp = c & 0x07; len = 4; }
  else return c;
  for (size_t k = 1; k < len; ++k) {
    if (pos + k >= s.size()) return c;
    unsigned char cc = s[pos + k];
    if ((cc & 0xc0) != 0x80) return c;
    cp = (cp << 6) | (cc & 0x3f);
  }
  return cp;
}

size_t utf8_length(std::string_view s) { return utf8_boundaries(s).size() - 1; }

bool is_punct_codepoint(uint32_t cp) {
  if (cp < 0x80) {
    return std::ispunct(static_cast<int>(cp)) != 0;
  }
  if (cp >= 0x2000 && cp <= 0x206f) return true;  // general punctuation (… — – ‘ ’ “ ”)
  switch (cp) {
    case 0x00a1:  // inverted exclamation
    case 0x00bf:  // inverted question
    case 0x00ab:  // left guillemet
    case 0x00bb:  // right guillemet
    case 0x00b7:  // middle dot
    case 0x0964:  // devanagari danda
    case 0x0965:  // devanagari double danda
    case 0x3001:  // ideographic comma
    case 0x3002:  // ideographic full stop
      return true;
    default:
      return false;
  }
}

bool is_all_punct(std::string_view s) {
  if (s.empty()) return false;
  auto bounds = utf8_boundaries(s);
  for (size_t k = 0; k + 1 < bounds.size(); ++k) {
    if (!is_punct_codepoint(utf8_decode(s, bounds[k]))) return false;
  }
  return true;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = char(c - 'A' + 'a');
  }
  return out;
}

bool has_ascii_upper(std::string_view s) {
  for (char c : s) {
    if (c >= 'A' && c <= 'Z') return true;
  }
  return false;
}

std::string strip_edge_punct(std::string_view s) {
  auto bounds = utf8_boundaries(s);
  size_t n = bounds.size() - 1;  // codepoint count
  size_t lo = 0, hi = n;
  while (lo < hi && is_punct_codepoint(utf8_decode(s, bounds[lo]))) ++lo;
  while (hi > lo && is_punct_codepoint(utf8_decode(s, bounds[hi - 1]))) --hi;
  return std::string(s.substr(bounds[lo], bounds[hi] - bounds[lo]));
}

std::vector<std::string> split_whitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (size_t i = 0; i < prefix.size(); ++i) {
    char a = s[i], b = prefix[i];
    if (a >= 'A' && a <= 'Z') a = char(a - 'A' + 'a');
    if (b >= 'A' && b <= 'Z') b = char(b - 'A' + 'a');
    if (a != b) return false;
  }
  return true;
}

}  // namespace cmix
