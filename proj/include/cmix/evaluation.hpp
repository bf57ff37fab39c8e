#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cmix/learners.hpp"

namespace cmix {

// Author-grouped fold assignment: all of an author's tweets land in one fold
// and per-fold author counts differ by at most one.
struct FoldAssignment {
  int k = 0;
  std::vector<int> tweet_fold;             // corpus position -> fold
  std::map<std::string, int> author_fold;  // the semantic content; tweet_fold derives from it
};

// Authors are sorted, shuffled with the seed and dealt round-robin, so the
// assignment depends on the author set, never on tweet order.
FoldAssignment make_grouped_folds(const Corpus& c, int k, uint64_t seed);

// Same dealing over a bare author list (one entry per matrix row); used for
// the inner grid-search folds.
std::vector<int> group_rows_by_author(const std::vector<std::string>& authors, int k,
                                      uint64_t seed);

struct FoldConfusion {
  int64_t male_as_male = 0;
  int64_t male_as_female = 0;
  int64_t female_as_male = 0;
  int64_t female_as_female = 0;
};

struct CVReport {
  int k = 0;
  std::vector<double> fold_accuracy;
  std::vector<int> fold_test_size;
  std::vector<FoldConfusion> confusion;
  double mean_accuracy = 0;
  std::string fingerprint;  // featureset, model spec, seed, thresholds
};

struct EvalOptions {
  FeatureConfig features;
  int select_k = 1000;      // chi-square budget; 0 disables selection
  bool global_fit = false;  // fit vocabularies once on the whole corpus (leaks test data)
  bool partitioned = false; // per-language vocabularies, concatenated
  bool grid = false;        // nested grid search inside each training partition
  int inner_folds = 3;
  int jobs = 1;
  uint64_t seed = 1;
  SpellingMap spelling = default_spelling_map();
};

// What a fold's fit produced; handed to the inspector before prediction so
// tests can check that no test-fold tweet contributed to any artifact.
struct FoldArtifacts {
  int fold = 0;
  std::vector<size_t> train_indices;  // corpus positions, sorted by tweet id
  std::vector<size_t> test_indices;
  const Vocabulary* vocabulary = nullptr;          // null in partitioned mode
  const PartitionedVocabulary* partitioned = nullptr;
  const RefTokenTable* ref_table = nullptr;
  const SelectionMask* mask = nullptr;             // null when selection is off
  const ModelSpec* chosen_spec = nullptr;
};
using FoldInspector = std::function<void(const FoldArtifacts&)>;

// Per fold: fit vocabularies, reference table and selection mask on the
// training partition only, train (with nested grid search when requested),
// score the held-out fold. Rows are ordered by tweet id inside each
// partition, which makes every cell invariant to tweet order in the file.
CVReport cross_validate(const Corpus& c, Featureset set, const ModelSpec& spec,
                        const FoldAssignment& folds, const EvalOptions& opt,
                        const FoldInspector& inspect = nullptr);

struct ExperimentTable {
  // rows: CharNgrams, BagOfWords, RefTokens, TopHashtags, All
  // cols: NaiveBayes, SvmRbf, RandomForest
  std::array<std::array<double, 3>, 5> cells{};
  std::string fingerprint;
};

extern const std::array<Featureset, 5> kExperimentRows;
extern const std::array<ModelKind, 3> kExperimentCols;

// Published accuracies from the original study (its corpus is not
// redistributable, so these are context, not targets).
extern const std::array<std::array<double, 3>, 5> kPublishedBaseline;

ExperimentTable run_experiment_table(const Corpus& c, const std::array<ModelSpec, 3>& specs,
                                     const FoldAssignment& folds, const EvalOptions& opt);

}  // namespace cmix
