#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cmix/corpus.hpp"

namespace cmix {

// Spelling variants mapped to a canonical form ("dis" -> "this"). Idempotent:
// no canonical form is itself a variant key.
using SpellingMap = std::map<std::string, std::string>;

// `variant<TAB>canonical` per line, '#' comments and blank lines ignored.
SpellingMap load_spelling_map(std::istream& in);
SpellingMap load_spelling_map_file(const std::string& path);
const SpellingMap& default_spelling_map();

inline constexpr std::string_view kHashtagPlaceholder = "hashtag";
inline constexpr std::string_view kMentionPlaceholder = "mention";
inline constexpr std::string_view kUrlPlaceholder = "url";

struct ProcessedTweet {
  std::vector<std::string> tokens;       // lowercase, non-empty
  std::vector<LanguageTag> langs;        // aligned with tokens; O for placeholders
  std::vector<std::string> hashtags;     // original hashtag bodies, '#' removed
  int mentions_count = 0;
  int urls_count = 0;
  GenderLabel gender = GenderLabel::Male;
  std::string author_id;
  std::string id;

  bool operator==(const ProcessedTweet&) const = default;
};

bool is_mention(std::string_view token);   // '@' + at least one word character
bool is_url(std::string_view token);       // http://, https:// or www. prefix
bool is_hashtag(std::string_view token);   // '#' + non-empty body

// Whitespace split, lowercase, leading/trailing punctuation stripped from
// plain tokens (hashtags, mentions, urls and the placeholder words keep their
// shape); tokens that strip to nothing are dropped.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> normalize_spelling(std::vector<std::string> tokens, const SpellingMap& map);

// Splits a hashtag body at underscores, lower-to-upper camel boundaries and
// letter/digit transitions; pieces are lowercased. Never empty for non-empty
// input (falls back to the lowercased body when splitting leaves nothing).
std::vector<std::string> decompose_hashtag(std::string_view tag);

// Pipeline per token: placeholder substitution and hashtag decomposition,
// then punctuation removal, then spelling normalization. Decomposition sees
// the original casing; normalization sees final token forms.
ProcessedTweet preprocess_tweet(const AnnotatedTweet& t, const SpellingMap& map);

std::vector<ProcessedTweet> preprocess_corpus(const Corpus& c, const SpellingMap& map);

}  // namespace cmix
