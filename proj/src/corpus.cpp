#include "cmix/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "cmix/textutil.hpp"
#include "json.hpp"

namespace cmix {

const char* to_string(LanguageTag t) {
  switch (t) {
    case LanguageTag::En: return "En";
    case LanguageTag::Hi: return "Hi";
    case LanguageTag::O: return "O";
  }
  return "?";
}

const char* to_string(GenderLabel g) {
  return g == GenderLabel::Male ? "male" : "female";
}

namespace {

std::string escape_entities(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) { out += "&quot;"; break; }
        [[fallthrough]];
      default: out += c;
    }
  }
  return out;
}

std::string unescape_entities(std::string_view s, int line) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out += s[i];
      continue;
    }
    if (s.compare(i, 5, "&amp;") == 0) { out += '&'; i += 4; }
    else if (s.compare(i, 4, "&lt;") == 0) { out += '<'; i += 3; }
    else if (s.compare(i, 4, "&gt;") == 0) { out += '>'; i += 3; }
    else if (s.compare(i, 6, "&quot;") == 0) { out += '"'; i += 5; }
    else throw ParseError(line, "unknown entity escape");
  }
  return out;
}

bool has_whitespace(std::string_view s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') return true;
  }
  return false;
}

struct Line {
  std::string text;
  int number = 0;
};

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<Line> next() {
    std::string raw;
    if (!std::getline(in_, raw)) return std::nullopt;
    ++number_;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    return Line{std::move(raw), number_};
  }

 private:
  std::istream& in_;
  int number_ = 0;
};

bool is_blank(const std::string& s) {
  for (char c : s) {
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

// Pulls `name="value"` out of an opening tag; value may be empty.
std::optional<std::string> attribute(const std::string& line, const std::string& name, int lineno) {
  std::string key = name + "=\"";
  size_t pos = line.find(key);
  if (pos == std::string::npos) return std::nullopt;
  size_t start = pos + key.size();
  size_t end = line.find('"', start);
  if (end == std::string::npos) throw ParseError(lineno, "unterminated attribute value for '" + name + "'");
  return unescape_entities(line.substr(start, end - start), lineno);
}

// In strict mode (sink == nullptr) a domain-level problem throws; in
// collecting mode it is recorded against the current record and parsing
// continues. Structural problems always throw.
class RecordParser {
 public:
  RecordParser(LineReader& reader, std::vector<Violation>* sink) : reader_(reader), sink_(sink) {}

  // Reads past blank lines to the next <tweet ...> opening; false at EOF.
  bool next_record(AnnotatedTweet& out) {
    for (;;) {
      auto line = reader_.next();
      if (!line) return false;
      if (is_blank(line->text)) continue;
      const std::string& s = line->text;
      int n = line->number;
      if (s.rfind("<tweet ", 0) != 0 || s.back() != '>')
        throw ParseError(n, "expected <tweet ...> opening line");
      record_ok_ = true;
      record_line_ = n;
      auto id = attribute(s, "id", n);
      if (!id) throw ParseError(n, "missing id attribute on <tweet>");
      if (id->empty()) flag(*id, n, "empty id attribute");
      auto author = attribute(s, "author", n);
      if (author && author->empty()) {
        flag(*id, n, "empty author attribute");
        author.reset();
      }
      out = AnnotatedTweet{};
      out.id = *id;
      out.author_id = author.value_or(*id);
      parse_body(out, n);
      return true;
    }
  }

  bool record_ok() const { return record_ok_; }
  int record_line() const { return record_line_; }

 private:
  void flag(const std::string& id, int line, const std::string& message) {
    if (!sink_) throw ParseError(line, message, /*domain=*/true);
    sink_->push_back({id, "line " + std::to_string(line) + ": " + message, line});
    record_ok_ = false;
  }

  void parse_body(AnnotatedTweet& tweet, int open_line) {
    bool gender_seen = false;
    for (;;) {
      auto line = reader_.next();
      if (!line) throw ParseError(open_line, "unexpected end of input inside <tweet> record");
      const std::string& s = line->text;
      int n = line->number;
      if (is_blank(s)) throw ParseError(n, "blank line inside <tweet> record");
      if (s == "</tweet>") {
        if (!gender_seen) flag(tweet.id, n, "missing gender line in record '" + tweet.id + "'");
        if (tweet.tokens.empty()) flag(tweet.id, n, "empty tweet body in record '" + tweet.id + "'");
        return;
      }
      if (s.rfind("<word ", 0) == 0) {
        if (gender_seen) throw ParseError(n, "word line after gender line");
        size_t close = s.find('>');
        if (close == std::string::npos || s.substr(s.size() >= 7 ? s.size() - 7 : 0) != "</word>")
          throw ParseError(n, "malformed <word> line");
        auto lang = attribute(s.substr(0, close + 1), "lang", n);
        if (!lang) throw ParseError(n, "missing lang attribute");
        std::string body = s.substr(close + 1, s.size() - 7 - (close + 1));
        std::string surface = unescape_entities(body, n);
        if (surface.empty()) {
          flag(tweet.id, n, "empty token surface");
          continue;
        }
        if (has_whitespace(surface)) {
          flag(tweet.id, n, "whitespace in token surface");
          continue;
        }
        LanguageTag tag = LanguageTag::O;
        if (*lang == "En") tag = LanguageTag::En;
        else if (*lang == "Hi") tag = LanguageTag::Hi;
        else if (*lang == "O") tag = LanguageTag::O;
        else {
          flag(tweet.id, n, "unknown lang tag value '" + *lang + "'");
          continue;
        }
        tweet.tokens.push_back({std::move(surface), tag});
        continue;
      }
      if (s.rfind("<gender>", 0) == 0) {
        if (gender_seen) throw ParseError(n, "duplicate gender line");
        if (s.substr(s.size() >= 9 ? s.size() - 9 : 0) != "</gender>" || s.size() < 17)
          throw ParseError(n, "malformed <gender> line");
        gender_seen = true;
        std::string value = to_lower(s.substr(8, s.size() - 17));
        if (value == "male") tweet.gender = GenderLabel::Male;
        else if (value == "female") tweet.gender = GenderLabel::Female;
        else flag(tweet.id, n, "unknown gender value '" + s.substr(8, s.size() - 17) + "'");
        continue;
      }
      throw ParseError(n, "unrecognized line inside record");
    }
  }

  LineReader& reader_;
  std::vector<Violation>* sink_;
  bool record_ok_ = true;
  int record_line_ = 0;
};

}  // namespace

Corpus parse_corpus(std::istream& in) {
  Corpus corpus;
  LineReader reader(in);
  RecordParser parser(reader, nullptr);
  std::unordered_set<std::string> seen_ids;
  AnnotatedTweet tweet;
  while (parser.next_record(tweet)) {
    if (!seen_ids.insert(tweet.id).second)
      throw ParseError(parser.record_line(), "duplicate tweet id '" + tweet.id + "'", true);
    corpus.tweets.push_back(std::move(tweet));
  }
  return corpus;
}

Corpus parse_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  return parse_corpus(in);
}

ParseOutcome parse_corpus_collect(std::istream& in) {
  ParseOutcome out;
  LineReader reader(in);
  RecordParser parser(reader, &out.violations);
  std::unordered_set<std::string> seen_ids;
  AnnotatedTweet tweet;
  while (parser.next_record(tweet)) {
    bool duplicate = !seen_ids.insert(tweet.id).second;
    if (duplicate) {
      out.violations.push_back(
          {tweet.id, "duplicate tweet id '" + tweet.id + "'", parser.record_line()});
      continue;
    }
    if (parser.record_ok()) out.corpus.tweets.push_back(std::move(tweet));
  }
  return out;
}

void serialize_corpus(const Corpus& c, std::ostream& out) {
  for (const AnnotatedTweet& t : c.tweets) {
    out << "<tweet id=\"" << escape_entities(t.id, true) << "\" author=\""
        << escape_entities(t.author_id, true) << "\">\n";
    for (const AnnotatedToken& tok : t.tokens) {
      out << "<word lang=\"" << to_string(tok.lang) << "\">"
          << escape_entities(tok.surface, false) << "</word>\n";
    }
    out << "<gender>" << to_string(t.gender) << "</gender>\n";
    out << "</tweet>\n";
  }
}

std::string serialize_corpus(const Corpus& c) {
  std::ostringstream os;
  serialize_corpus(c, os);
  return os.str();
}

std::string escape_annotation_text(std::string_view s, bool attribute) {
  return escape_entities(s, attribute);
}

namespace {

RawTweet raw_from_json(const nlohmann::json& j, int lineno) {
  if (!j.is_object()) throw ParseError(lineno, "record is not a JSON object");
  RawTweet r;
  auto get_string = [&](const char* key, std::string& dst, bool required) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) {
      if (required) throw ParseError(lineno, std::string("missing field: ") + key, true);
      return;
    }
    if (it->is_string()) dst = it->get<std::string>();
    else if (it->is_number_integer()) dst = std::to_string(it->get<int64_t>());
    else throw ParseError(lineno, std::string("field '") + key + "' has wrong type", true);
  };
  auto get_count = [&](const char* key, int64_t& dst) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    if (!it->is_number_integer())
      throw ParseError(lineno, std::string("field '") + key + "' is not an integer", true);
    int64_t v = it->get<int64_t>();
    if (v < 0) throw ParseError(lineno, std::string("field '") + key + "' is negative", true);
    dst = v;
  };
  get_string("id", r.id, true);
  get_string("text", r.text, true);
  if (r.id.empty()) throw ParseError(lineno, "missing field: id", true);
  if (r.text.empty()) throw ParseError(lineno, "missing field: text", true);
  get_string("timestamp", r.timestamp, false);
  get_string("user", r.user, false);
  get_string("fullname", r.fullname, false);
  get_count("replies", r.replies);
  get_count("retweets", r.retweets);
  return r;
}

}  // namespace

std::vector<RawTweet> ingest_raw(std::istream& in) {
  std::vector<RawTweet> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (is_blank(raw)) continue;
    nlohmann::json j = nlohmann::json::parse(raw, nullptr, false);
    if (j.is_discarded()) throw ParseError(lineno, "unparseable record");
    out.push_back(raw_from_json(j, lineno));
  }
  return out;
}

std::vector<RawTweet> ingest_raw_skip(std::istream& in, std::vector<Violation>& skipped) {
  std::vector<RawTweet> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (is_blank(raw)) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(raw, nullptr, false);
      if (j.is_discarded()) throw ParseError(lineno, "unparseable record");
      out.push_back(raw_from_json(j, lineno));
    } catch (const ParseError& e) {
      skipped.push_back({"", e.what(), e.line()});
    }
  }
  return out;
}

std::vector<Violation> validate(const Corpus& c) {
  std::vector<Violation> out;
  std::unordered_set<std::string> seen;
  auto has_newline = [](const std::string& s) {
    return s.find('\n') != std::string::npos || s.find('\r') != std::string::npos;
  };
  for (const AnnotatedTweet& t : c.tweets) {
    if (t.id.empty()) out.push_back({t.id, "empty tweet id"});
    if (!seen.insert(t.id).second) out.push_back({t.id, "duplicate tweet id"});
    if (t.author_id.empty()) out.push_back({t.id, "empty author id"});
    if (has_newline(t.id)) out.push_back({t.id, "newline in tweet id"});
    if (has_newline(t.author_id)) out.push_back({t.id, "newline in author id"});
    if (t.tokens.empty()) out.push_back({t.id, "empty token list"});
    for (const AnnotatedToken& tok : t.tokens) {
      if (tok.surface.empty()) out.push_back({t.id, "empty token surface"});
      else if (has_whitespace(tok.surface)) out.push_back({t.id, "whitespace in token surface"});
    }
  }
  return out;
}

CorpusStats compute_stats(const Corpus& c) {
  CorpusStats s;
  int64_t hashtags[2] = {0, 0};
  int64_t puncts[2] = {0, 0};
  int64_t words[2] = {0, 0};
  int64_t tweets[2] = {0, 0};
  for (const AnnotatedTweet& t : c.tweets) {
    int g = t.gender == GenderLabel::Male ? 0 : 1;
    ++tweets[g];
    words[g] += int64_t(t.tokens.size());
    for (const AnnotatedToken& tok : t.tokens) {
      ++s.total_words;
      switch (tok.lang) {
        case LanguageTag::Hi: ++s.words_hi; break;
        case LanguageTag::En: ++s.words_en; break;
        case LanguageTag::O: ++s.words_other; break;
      }
      if (tok.surface[0] == '#') ++hashtags[g];
      else if (is_all_punct(tok.surface)) ++puncts[g];
    }
  }
  s.total_tweets = int64_t(c.tweets.size());
  s.male_tweets = tweets[0];
  s.female_tweets = tweets[1];
  auto avg = [](int64_t sum, int64_t n) -> std::optional<double> {
    if (n == 0) return std::nullopt;
    return double(sum) / double(n);
  };
  s.avg_hashtags = {avg(hashtags[0], tweets[0]), avg(hashtags[1], tweets[1])};
  s.avg_punct = {avg(puncts[0], tweets[0]), avg(puncts[1], tweets[1])};
  s.avg_words = {avg(words[0], tweets[0]), avg(words[1], tweets[1])};
  return s;
}

}  // namespace cmix
