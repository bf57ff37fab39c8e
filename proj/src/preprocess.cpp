#include "cmix/preprocess.hpp"

#include <cctype>
#include <fstream>
#include <istream>

#include "cmix/textutil.hpp"

namespace cmix {

SpellingMap load_spelling_map(std::istream& in) {
  SpellingMap map;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
      throw ParseError(lineno, "expected 'variant<TAB>canonical'");
    std::string variant = to_lower(line.substr(0, tab));
    std::string canonical = to_lower(line.substr(tab + 1));
    if (variant == kHashtagPlaceholder || variant == kMentionPlaceholder || variant == kUrlPlaceholder)
      throw ParseError(lineno, "placeholder token '" + variant + "' cannot be a spelling variant");
    map[variant] = canonical;
  }
  // One application must reach a fixed point.
  for (const auto& [variant, canonical] : map) {
    if (map.count(canonical))
      throw DomainError("spelling map is not idempotent: canonical form '" + canonical +
                        "' is also a variant");
  }
  return map;
}

SpellingMap load_spelling_map_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  return load_spelling_map(in);
}

const SpellingMap& default_spelling_map() {
  static const SpellingMap map = {
      {"dis", "this"}, {"dat", "that"}, {"u", "you"},
      {"plz", "please"}, {"pls", "please"}, {"gr8", "great"},
  };
  return map;
}

bool is_mention(std::string_view token) {
  if (token.size() < 2 || token[0] != '@') return false;
  char c = token[1];
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_url(std::string_view token) {
  return starts_with_ci(token, "http://") || starts_with_ci(token, "https://") ||
         starts_with_ci(token, "www.");
}

bool is_hashtag(std::string_view token) {
  return token.size() >= 2 && token[0] == '#' && !is_all_punct(token);
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (std::string& raw : split_whitespace(text)) {
    if (is_hashtag(raw) || is_mention(raw) || is_url(raw) ||
        raw == kHashtagPlaceholder || raw == kMentionPlaceholder || raw == kUrlPlaceholder) {
      out.push_back(to_lower(raw));
      continue;
    }
    std::string stripped = strip_edge_punct(raw);
    if (stripped.empty()) continue;
    out.push_back(to_lower(stripped));
  }
  return out;
}

std::vector<std::string> normalize_spelling(std::vector<std::string> tokens, const SpellingMap& map) {
  for (std::string& t : tokens) {
    auto it = map.find(t);
    if (it != map.end()) t = it->second;
  }
  return tokens;
}

namespace {

enum class CharClass { Lower, Upper, Digit, Other };

CharClass classify(char c) {
  if (c >= 'a' && c <= 'z') return CharClass::Lower;
  if (c >= 'A' && c <= 'Z') return CharClass::Upper;
  if (c >= '0' && c <= '9') return CharClass::Digit;
  return CharClass::Other;  // includes UTF-8 continuation bytes
}

}  // namespace

std::vector<std::string> decompose_hashtag(std::string_view tag) {
  std::vector<std::string> out;
  std::string current;
  CharClass prev = CharClass::Other;
  bool first = true;
  auto flush = [&] {
    if (!current.empty()) {
      out.push_back(to_lower(current));
      current.clear();
    }
  };
  for (char c : tag) {
    if (c == '_') {
      flush();
      first = true;
      continue;
    }
    CharClass cls = classify(c);
    if (!first) {
      bool camel = prev == CharClass::Lower && cls == CharClass::Upper;
      bool digit_edge = (prev == CharClass::Digit) != (cls == CharClass::Digit);
      if (camel || digit_edge) flush();
    }
    current += c;
    prev = cls;
    first = false;
  }
  flush();
  if (out.empty() && !tag.empty()) out.push_back(to_lower(std::string(tag)));
  return out;
}

ProcessedTweet preprocess_tweet(const AnnotatedTweet& t, const SpellingMap& map) {
  ProcessedTweet p;
  p.gender = t.gender;
  p.author_id = t.author_id;
  p.id = t.id;

  for (const AnnotatedToken& tok : t.tokens) {
    const std::string& s = tok.surface;
    if (is_hashtag(s)) {
      std::string body = s.substr(1);
      p.hashtags.push_back(body);
      p.tokens.emplace_back(kHashtagPlaceholder);
      p.langs.push_back(LanguageTag::O);
      for (std::string& piece : decompose_hashtag(body)) {
        p.tokens.push_back(std::move(piece));
        p.langs.push_back(LanguageTag::O);
      }
      continue;
    }
    if (is_mention(s)) {
      ++p.mentions_count;
      p.tokens.emplace_back(kMentionPlaceholder);
      p.langs.push_back(LanguageTag::O);
      continue;
    }
    if (is_url(s)) {
      ++p.urls_count;
      p.tokens.emplace_back(kUrlPlaceholder);
      p.langs.push_back(LanguageTag::O);
      continue;
    }
    p.tokens.push_back(to_lower(s));
    p.langs.push_back(tok.lang);
  }

  // Punctuation removal: strip token edges, drop what vanishes.
  std::vector<std::string> kept;
  std::vector<LanguageTag> kept_langs;
  kept.reserve(p.tokens.size());
  kept_langs.reserve(p.tokens.size());
  for (size_t i = 0; i < p.tokens.size(); ++i) {
    std::string stripped = strip_edge_punct(p.tokens[i]);
    if (stripped.empty()) continue;
    kept.push_back(std::move(stripped));
    kept_langs.push_back(p.langs[i]);
  }
  p.tokens = std::move(kept);
  p.langs = std::move(kept_langs);

  p.tokens = normalize_spelling(std::move(p.tokens), map);
  return p;
}

std::vector<ProcessedTweet> preprocess_corpus(const Corpus& c, const SpellingMap& map) {
  std::vector<ProcessedTweet> out;
  out.reserve(c.tweets.size());
  for (const AnnotatedTweet& t : c.tweets) out.push_back(preprocess_tweet(t, map));
  return out;
}

}  // namespace cmix
