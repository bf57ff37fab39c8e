#pragma once

#include <string>
#include <vector>

#include "cmix/corpus.hpp"
#include "cmix/rng.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(CMIX_TEST_DATA_DIR) + "/" + name;
}

// Random but always-valid corpora for property tests: unique ids, non-empty
// authors and tokens, surfaces free of whitespace.
struct CorpusGenOptions {
  int max_tweets = 20;
  int max_tokens = 8;
  int author_pool = 6;
  bool spicy_surfaces = true;  // entities, '#', '@', multibyte
};

inline std::string random_surface(cmix::Rng& rng, bool spicy) {
  static const std::vector<std::string> plain = {
      "a", "b", "c", "d", "e", "f", "g", "h", "k", "m", "n", "o", "p", "r", "s", "t", "1", "2"};
  static const std::vector<std::string> extra = {
      "&", "<", ">", "\"", "'", "#", "@", "_", ".", "!", "…", "é", "&amp;"};
  int len = int(rng.between(1, 8));
  std::string s;
  for (int i = 0; i < len; ++i) {
    bool use_extra = spicy && rng.bernoulli(0.25);
    const auto& pool = use_extra ? extra : plain;
    s += pool[size_t(rng.below(pool.size()))];
  }
  return s;
}

inline cmix::Corpus random_corpus(cmix::Rng& rng, const CorpusGenOptions& opt = {}) {
  cmix::Corpus c;
  int n = int(rng.between(0, opt.max_tweets));
  for (int i = 0; i < n; ++i) {
    cmix::AnnotatedTweet t;
    t.id = "t" + std::to_string(i) + "_" + std::to_string(rng.below(1000));
    t.author_id = "u" + std::to_string(rng.below(uint64_t(opt.author_pool)));
    t.gender = rng.bernoulli(0.5) ? cmix::GenderLabel::Male : cmix::GenderLabel::Female;
    int tokens = int(rng.between(1, opt.max_tokens));
    for (int k = 0; k < tokens; ++k) {
      cmix::AnnotatedToken tok;
      tok.surface = random_surface(rng, opt.spicy_surfaces);
      uint64_t lang = rng.below(3);
      tok.lang = lang == 0 ? cmix::LanguageTag::En
                           : (lang == 1 ? cmix::LanguageTag::Hi : cmix::LanguageTag::O);
      t.tokens.push_back(std::move(tok));
    }
    c.tweets.push_back(std::move(t));
  }
  return c;
}

}  // namespace testutil
