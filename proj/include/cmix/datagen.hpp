#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmix/corpus.hpp"

namespace cmix {

// Built-in background vocabularies: transliterated-Hindi and English word
// lists with visibly different character distributions.
std::span<const std::string_view> builtin_hindi_words();
std::span<const std::string_view> builtin_english_words();

struct GenderMarker {
  std::string token;
  LanguageTag lang = LanguageTag::Hi;
};

// Synthetic corpus shape. A marker listed for a gender is emitted into that
// gender's tweets with probability p_signal and into the other gender's with
// 1 - p_signal, so p_signal = 0.5 means no signal at all.
//
// Hashtag and punctuation rates default to the same value for both genders:
// with neutral rates, p_signal is the only class signal in the corpus, which
// the chance-level checks depend on. Set the per-gender rates apart (say
// female hashtags 2 vs male 1, punctuation 3 vs 1) to reproduce the observed
// real-corpus shape.
struct GenConfig {
  int n_authors = 50;
  int male_authors = -1;  // -1: half, rounded up
  int tweets_per_author = 20;
  int tokens_min = 16;
  int tokens_max = 22;
  double hi_en_mix = 0.55;  // probability a background token is Hindi
  double p_signal = 0.9;
  std::vector<GenderMarker> male_markers = {
      {"bhidu", LanguageTag::Hi}, {"jitenge", LanguageTag::Hi}, {"stadium", LanguageTag::En}};
  std::vector<GenderMarker> female_markers = {
      {"likhungi", LanguageTag::Hi}, {"karungi", LanguageTag::Hi}, {"husband", LanguageTag::En}};
  double hashtag_rate_male = 1.0;
  double hashtag_rate_female = 1.0;
  double punct_rate_male = 1.0;
  double punct_rate_female = 1.0;
  double mention_rate = 0.08;
  double url_rate = 0.04;
  uint64_t seed = 1;
  std::vector<std::string> hi_words;  // empty: use the built-in list
  std::vector<std::string> en_words;
};

// Deterministic given the config; the emitted corpus always passes validate.
Corpus generate(const GenConfig& cfg);

// One token per line, '#' comments ignored.
std::vector<std::string> load_wordlist_file(const std::string& path);

}  // namespace cmix
