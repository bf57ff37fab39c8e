#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cmix/preprocess.hpp"

namespace cmix {

enum class FeatureKind { CharNgram, WordNgram, RefToken, Hashtag };

enum class Featureset { CharNgrams, BagOfWords, RefTokens, TopHashtags, All };

const char* to_string(FeatureKind k);
const char* to_string(Featureset f);
Featureset featureset_from_string(const std::string& name);

struct FeatureId {
  FeatureKind kind;
  int order;            // n-gram order; 0 for RefToken / Hashtag
  std::string payload;  // gram text, space-joined word n-gram, "Hi:tok"/"En:tok", hashtag body

  auto operator<=>(const FeatureId&) const = default;
};

struct CharNgramConfig {
  int n_min = 2;
  int n_max = 5;
  int min_freq = 10;
  bool pad = false;  // adds '^'/'$' token-boundary sentinels when set
};

struct WordNgramConfig {
  int n_min = 1;
  int n_max = 3;
  int min_freq = 10;
};

struct RefTokenConfig {
  double min_share = 0.6;  // dominant-class frequency share
  int min_freq = 2;        // total training-corpus frequency
};

struct FeatureConfig {
  CharNgramConfig char_ngrams;
  WordNgramConfig word_ngrams;
  RefTokenConfig ref_tokens;
  int hashtag_top_k = 50;
};

struct RefTokenStats {
  int64_t freq_male = 0;
  int64_t freq_female = 0;
  int64_t total() const { return freq_male + freq_female; }
  double score() const {
    return double(freq_male > freq_female ? freq_male : freq_female) / double(total());
  }
};

// Gender-indicative tokens, one dictionary per language; only tokens passing
// the share and frequency thresholds are kept.
struct RefTokenTable {
  std::map<std::string, RefTokenStats> hi;
  std::map<std::string, RefTokenStats> en;
};

// Frozen feature-id <-> column bijection. Indices are assigned by sorting the
// ids, so a vocabulary is a pure function of the feature set regardless of
// how the fit enumerated it.
class Vocabulary {
 public:
  Vocabulary() = default;
  static Vocabulary freeze(std::vector<FeatureId> ids, const FeatureConfig& cfg, Featureset set);

  int dim() const { return int(ids_.size()); }
  const std::vector<FeatureId>& features() const { return ids_; }
  // -1 when absent.
  int index_of(const FeatureId& id) const;
  Featureset featureset() const { return set_; }
  // n ranges and thresholds used at fit time; vectorize re-enumerates
  // candidate grams from them.
  const FeatureConfig& config() const;

  bool operator==(const Vocabulary& other) const;

 private:
  std::vector<FeatureId> ids_;  // sorted; position == column index
  std::map<FeatureId, int> index_;
  Featureset set_ = Featureset::All;
  std::shared_ptr<const FeatureConfig> config_;
};

struct SparseVector {
  int dim = 0;
  std::vector<std::pair<int, double>> entries;  // strictly increasing indices, nonzero values

  double squared_norm() const;
  bool operator==(const SparseVector&) const = default;
};

double dot(const SparseVector& a, const SparseVector& b);
double squared_distance(const SparseVector& a, const SparseVector& b);

struct FeatureMatrix {
  int dim = 0;
  std::vector<SparseVector> rows;
  std::vector<GenderLabel> labels;
  std::vector<std::string> authors;

  size_t size() const { return rows.size(); }
};

struct SelectionMask {
  int original_dim = 0;
  std::vector<int> kept;         // sorted ascending, unique
  std::vector<double> scores;    // chi-square score per original column

  bool operator==(const SelectionMask&) const = default;
};

// --- fitting (always over the training partition only) ---

// Character n-grams within each token; grams kept when their total training
// frequency reaches min_freq.
std::vector<FeatureId> fit_char_ngrams(std::span<const ProcessedTweet> corpus,
                                       const CharNgramConfig& cfg);

// Word n-grams over the token sequence of each tweet (never across tweets).
std::vector<FeatureId> fit_word_ngrams(std::span<const ProcessedTweet> corpus,
                                       const WordNgramConfig& cfg);

// Token occurrence counts per gender; kept when the dominant class holds at
// least min_share of the occurrences and the total is at least min_freq.
// O-tagged tokens are out; Hi and En get separate dictionaries.
RefTokenTable fit_reference_tokens(std::span<const ProcessedTweet> corpus,
                                   const RefTokenConfig& cfg);

// The k most frequent original hashtag bodies, ties to the lexicographically
// smaller; binary presence features.
std::vector<FeatureId> fit_top_hashtags(std::span<const ProcessedTweet> corpus, int k);

// Fits whichever families the featureset selects and freezes the result.
Vocabulary build_vocabulary(std::span<const ProcessedTweet> corpus, const FeatureConfig& cfg,
                            Featureset set);

// --- vectorization ---

// Count features for n-grams and reference tokens, 0/1 for hashtags.
// Out-of-vocabulary content is silently ignored.
SparseVector vectorize(const ProcessedTweet& t, const Vocabulary& v);

FeatureMatrix vectorize_all(std::span<const ProcessedTweet> corpus, const Vocabulary& v);

// --- chi-square selection ---

// Presence-vs-gender 2x2 tables per column:
//   chi2 = N*(AD-BC)^2 / ((A+B)(C+D)(A+C)(B+D))
// Keeps the k best-scoring supported columns (ties to the lower index);
// columns with a zero marginal are unsupported and never kept.
SelectionMask chi_square_select(const FeatureMatrix& m, int k = 1000);

SparseVector apply_mask(const SparseVector& x, const SelectionMask& mask);
FeatureMatrix apply_mask(const FeatureMatrix& m, const SelectionMask& mask);

// --- language-partitioned variant ---

struct PartitionedVocabulary {
  Vocabulary hi;
  Vocabulary en;
  int dim() const { return hi.dim() + en.dim(); }
};

// Token-derived families fit over only-Hi and only-En token subsequences;
// hashtag features are language-neutral (tagged O) and take no part here.
PartitionedVocabulary fit_partitioned(std::span<const ProcessedTweet> corpus,
                                      const FeatureConfig& cfg, Featureset set);

// Concatenates the Hi vector and the En vector.
SparseVector vectorize_partitioned(const ProcessedTweet& t, const PartitionedVocabulary& pv);

FeatureMatrix vectorize_all_partitioned(std::span<const ProcessedTweet> corpus,
                                        const PartitionedVocabulary& pv);

// --- persistence ---

void save_vocabulary(const Vocabulary& v, std::ostream& out);
Vocabulary load_vocabulary(std::istream& in);
void save_mask(const SelectionMask& m, std::ostream& out);
SelectionMask load_mask(std::istream& in);

}  // namespace cmix
