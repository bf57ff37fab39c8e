#include "cmix/datagen.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "cmix/rng.hpp"
#include "cmix/textutil.hpp"

namespace cmix {

std::vector<std::string> load_wordlist_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  std::vector<std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tokens = split_whitespace(line);
    if (tokens.size() != 1) throw ParseError(lineno, "expected one token per line");
    out.push_back(tokens[0]);
  }
  if (out.empty()) throw DomainError("wordlist file is empty: " + path);
  return out;
}

namespace {

void check_config(const GenConfig& cfg, int male_authors) {
  if (cfg.n_authors < 2) throw DomainError("need at least 2 authors");
  if (male_authors <= 0 || male_authors >= cfg.n_authors)
    throw DomainError("both genders must be represented among the authors");
  if (cfg.tweets_per_author < 1) throw DomainError("tweets_per_author must be >= 1");
  if (cfg.tokens_min < 1 || cfg.tokens_min > cfg.tokens_max)
    throw DomainError("invalid tokens-per-tweet range");
  auto prob = [](double p, const char* name) {
    if (p < 0 || p > 1) throw DomainError(std::string(name) + " must be within [0, 1]");
  };
  prob(cfg.hi_en_mix, "hi_en_mix");
  prob(cfg.p_signal, "p_signal");
  prob(cfg.mention_rate, "mention_rate");
  prob(cfg.url_rate, "url_rate");
  auto rate = [](double r, const char* name) {
    if (r < 0) throw DomainError(std::string(name) + " must be >= 0");
  };
  rate(cfg.hashtag_rate_male, "hashtag_rate_male");
  rate(cfg.hashtag_rate_female, "hashtag_rate_female");
  rate(cfg.punct_rate_male, "punct_rate_male");
  rate(cfg.punct_rate_female, "punct_rate_female");
}

std::string zero_padded(const char* prefix, int value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%0*d", prefix, width, value);
  return buf;
}

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg.hi_words.empty())
      for (std::string_view w : builtin_hindi_words()) hi_.emplace_back(w);
    else
      hi_ = cfg.hi_words;
    if (cfg.en_words.empty())
      for (std::string_view w : builtin_english_words()) en_.emplace_back(w);
    else
      en_ = cfg.en_words;
    // Tweets draw hashtags from a fixed per-corpus pool; real hashtags
    // repeat, and a pool is what makes the top-hashtags feature family
    // observable at test time.
    for (int i = 0; i < 24; ++i) hashtag_pool_.push_back(make_hashtag());
  }

  Corpus run(int male_authors) {
    Corpus corpus;
    int tweet_counter = 0;
    for (int a = 0; a < cfg_.n_authors; ++a) {
      GenderLabel gender = a < male_authors ? GenderLabel::Male : GenderLabel::Female;
      std::string author = zero_padded("a", a, 4);
      for (int t = 0; t < cfg_.tweets_per_author; ++t) {
        AnnotatedTweet tweet;
        tweet.id = zero_padded("t", tweet_counter++, 6);
        tweet.author_id = author;
        tweet.gender = gender;
        tweet.tokens = make_tokens(gender);
        corpus.tweets.push_back(std::move(tweet));
      }
    }
    return corpus;
  }

 private:
  const std::string& pick(const std::vector<std::string>& list) {
    return list[size_t(rng_.below(list.size()))];
  }

  void insert_at_random(std::vector<AnnotatedToken>& tokens, AnnotatedToken tok) {
    size_t pos = size_t(rng_.below(tokens.size() + 1));
    tokens.insert(tokens.begin() + ptrdiff_t(pos), std::move(tok));
  }

  // floor(rate) occurrences plus one more with the fractional probability,
  // giving an exact mean of `rate`.
  int draw_count(double rate) {
    double base = std::floor(rate);
    return int(base) + (rng_.bernoulli(rate - base) ? 1 : 0);
  }

  std::string make_hashtag() {
    int words = int(rng_.between(2, 3));
    bool camel = rng_.bernoulli(0.5);
    std::string body;
    for (int w = 0; w < words; ++w) {
      std::string word = rng_.bernoulli(cfg_.hi_en_mix) ? pick(hi_) : pick(en_);
      if (camel) {
        if (word[0] >= 'a' && word[0] <= 'z') word[0] = char(word[0] - 'a' + 'A');
        body += word;
      } else {
        if (w > 0) body += '_';
        body += word;
      }
    }
    return "#" + body;
  }

  std::vector<AnnotatedToken> make_tokens(GenderLabel gender) {
    std::vector<AnnotatedToken> tokens;
    int length = int(rng_.between(cfg_.tokens_min, cfg_.tokens_max));
    tokens.reserve(size_t(length) + 8);
    for (int i = 0; i < length; ++i) {
      if (rng_.bernoulli(cfg_.hi_en_mix)) tokens.push_back({pick(hi_), LanguageTag::Hi});
      else tokens.push_back({pick(en_), LanguageTag::En});
    }
    for (const GenderMarker& m : cfg_.male_markers) {
      double p = gender == GenderLabel::Male ? cfg_.p_signal : 1.0 - cfg_.p_signal;
      if (rng_.bernoulli(p)) insert_at_random(tokens, {m.token, m.lang});
    }
    for (const GenderMarker& m : cfg_.female_markers) {
      double p = gender == GenderLabel::Female ? cfg_.p_signal : 1.0 - cfg_.p_signal;
      if (rng_.bernoulli(p)) insert_at_random(tokens, {m.token, m.lang});
    }
    double hashtag_rate = gender == GenderLabel::Male ? cfg_.hashtag_rate_male : cfg_.hashtag_rate_female;
    for (int h = draw_count(hashtag_rate); h > 0; --h)
      tokens.push_back({pick(hashtag_pool_), LanguageTag::O});
    static const char* kPunct[] = {"!", "!!", "...", "?", "!?"};
    double punct_rate = gender == GenderLabel::Male ? cfg_.punct_rate_male : cfg_.punct_rate_female;
    for (int p = draw_count(punct_rate); p > 0; --p)
      insert_at_random(tokens, {kPunct[rng_.below(5)], LanguageTag::O});
    if (rng_.bernoulli(cfg_.mention_rate))
      insert_at_random(tokens, {"@user" + std::to_string(rng_.below(10000)), LanguageTag::O});
    if (rng_.bernoulli(cfg_.url_rate))
      insert_at_random(tokens, {"http://t.co/" + std::to_string(rng_.below(100000)), LanguageTag::O});
    return tokens;
  }

  const GenConfig& cfg_;
  Rng rng_;
  std::vector<std::string> hi_;
  std::vector<std::string> en_;
  std::vector<std::string> hashtag_pool_;
};

}  // namespace

Corpus generate(const GenConfig& cfg) {
  int male_authors = cfg.male_authors >= 0 ? cfg.male_authors : (cfg.n_authors + 1) / 2;
  check_config(cfg, male_authors);
  Generator gen(cfg);
  return gen.run(male_authors);
}

}  // namespace cmix
