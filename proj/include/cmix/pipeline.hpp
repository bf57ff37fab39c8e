#pragma once

#include <iosfwd>
#include <string>

#include "cmix/evaluation.hpp"

namespace cmix {

// Everything needed to classify a new annotated tweet: the preprocessing
// spelling map, the frozen vocabulary, the selection mask and the fitted
// model, in one reloadable file.
struct Pipeline {
  SpellingMap spelling;
  Featureset featureset = Featureset::All;
  Vocabulary vocabulary;
  SelectionMask mask;      // empty kept list with original_dim == 0 means no selection
  TrainedModel model;

  bool has_mask() const { return mask.original_dim > 0; }

  GenderLabel predict(const AnnotatedTweet& t) const;
  SparseVector features_of(const AnnotatedTweet& t) const;
};

struct TrainOptions {
  FeatureConfig features;
  int select_k = 1000;
  bool grid = true;  // pick hyperparameters by grouped CV on the training corpus
  int inner_folds = 3;
  uint64_t seed = 1;
  SpellingMap spelling = default_spelling_map();
};

struct TrainSummary {
  int fitted_dim = 0;     // vocabulary size before selection
  int selected_dim = 0;   // columns the model actually sees
  std::string chosen_spec;
  double grid_accuracy = 0;  // inner-CV accuracy of the winner; 0 when grid is off
};

// Full-corpus fit: vocabulary, chi-square selection, optional grid search,
// final training. The returned pipeline reproduces its predictions after a
// save/load round trip.
Pipeline train_pipeline(const Corpus& c, Featureset set, const ModelSpec& spec,
                        const TrainOptions& opt, TrainSummary* summary = nullptr);

void save_pipeline(const Pipeline& p, std::ostream& out);
Pipeline load_pipeline(std::istream& in);
void save_pipeline_file(const Pipeline& p, const std::string& path);
Pipeline load_pipeline_file(const std::string& path);

}  // namespace cmix
