#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmix {

enum class LanguageTag { En, Hi, O };

enum class GenderLabel { Male, Female };

const char* to_string(LanguageTag t);
const char* to_string(GenderLabel g);

struct AnnotatedToken {
  std::string surface;  // non-empty, no whitespace or newline
  LanguageTag lang = LanguageTag::O;

  bool operator==(const AnnotatedToken&) const = default;
};

struct AnnotatedTweet {
  std::string id;
  std::string author_id;  // anonymized; defaults to the tweet id when the file omits it
  std::vector<AnnotatedToken> tokens;
  GenderLabel gender = GenderLabel::Male;

  bool operator==(const AnnotatedTweet&) const = default;
};

struct Corpus {
  std::vector<AnnotatedTweet> tweets;

  bool operator==(const Corpus&) const = default;
};

struct RawTweet {
  std::string timestamp;
  std::string id;
  std::string text;
  std::string user;
  std::string fullname;
  int64_t replies = 0;
  int64_t retweets = 0;

  bool operator==(const RawTweet&) const = default;
};

struct GenderAverages {
  std::optional<double> male;
  std::optional<double> female;
};

struct CorpusStats {
  int64_t total_tweets = 0;
  int64_t total_words = 0;
  int64_t words_hi = 0;
  int64_t words_en = 0;
  int64_t words_other = 0;
  int64_t male_tweets = 0;
  int64_t female_tweets = 0;
  GenderAverages avg_hashtags;  // tokens starting with '#'
  GenderAverages avg_punct;     // tokens made solely of punctuation ('#' starts a hashtag instead)
  GenderAverages avg_words;
};

// Structural failure while reading an input file. `domain` marks errors that
// are bad field values rather than broken syntax (unknown tag value, missing
// gender, empty body, duplicate id); the validate command reports those as
// rule violations instead of aborting.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message, bool domain = false)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        domain_(domain) {}
  int line() const { return line_; }
  bool is_domain() const { return domain_; }

 private:
  int line_;
  bool domain_;
};

// Invalid input that is not a parse problem (single-class corpus, bad config,
// too few authors, ...). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string tweet_id;  // empty when the violation is not tied to one tweet
  std::string rule;
  int line = 0;  // only set by the collecting parser
};

// Annotation file format (one element per line, UTF-8, LF):
//
//   <tweet id="831...02" author="u042">
//   <word lang="En">triple</word>
//   <word lang="Hi">mudda</word>
//   <word lang="O">#TripleTalaq</word>
//   <gender>male</gender>
//   </tweet>
//
// lang is exactly En / Hi / O. The author attribute is optional; when absent
// the tweet id is used, making each tweet its own fold group. Gender values
// parse case-insensitively and serialize lowercase. Surfaces escape & < > as
// entities (plus &quot; inside attribute values). Blank lines between records
// are ignored.
Corpus parse_corpus(std::istream& in);
Corpus parse_corpus_file(const std::string& path);

// Lenient variant: records with domain-level problems are skipped and
// reported; structural syntax errors still throw.
struct ParseOutcome {
  Corpus corpus;
  std::vector<Violation> violations;
};
ParseOutcome parse_corpus_collect(std::istream& in);

void serialize_corpus(const Corpus& c, std::ostream& out);
std::string serialize_corpus(const Corpus& c);

// Entity escaping used by the annotation format (& < >, plus " inside
// attribute values).
std::string escape_annotation_text(std::string_view s, bool attribute);

// One JSON object per line: timestamp, id, text, user, fullname, replies,
// retweets. Unknown fields are ignored; id and text are mandatory.
std::vector<RawTweet> ingest_raw(std::istream& in);
// Skips malformed lines, reporting them, instead of failing fast.
std::vector<RawTweet> ingest_raw_skip(std::istream& in, std::vector<Violation>& skipped);

std::vector<Violation> validate(const Corpus& c);

CorpusStats compute_stats(const Corpus& c);

}  // namespace cmix
