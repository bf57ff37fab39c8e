#include "cmix/evaluation.hpp"
#include "cmix/learners.hpp"

namespace cmix {

namespace {

FeatureMatrix take_rows(const FeatureMatrix& m, const std::vector<int>& fold_of, int fold,
                        bool test) {
  FeatureMatrix out;
  out.dim = m.dim;
  for (size_t i = 0; i < m.rows.size(); ++i) {
    if ((fold_of[i] == fold) == test) {
      out.rows.push_back(m.rows[i]);
      out.labels.push_back(m.labels[i]);
      out.authors.push_back(m.authors[i]);
    }
  }
  return out;
}

bool both_classes(const FeatureMatrix& m) {
  bool male = false, female = false;
  for (GenderLabel g : m.labels) (g == GenderLabel::Male ? male : female) = true;
  return male && female;
}

}  // namespace

GridResult grid_search(const std::vector<ModelSpec>& grid, const FeatureMatrix& m, int folds,
                       uint64_t seed) {
  if (grid.empty()) throw DomainError("grid search needs at least one candidate");
  std::vector<int> fold_of = group_rows_by_author(m.authors, folds, seed);

  GridResult result;
  result.entries.reserve(grid.size());
  for (const ModelSpec& candidate : grid) {
    double sum = 0;
    for (int fold = 0; fold < folds; ++fold) {
      FeatureMatrix fit_part = take_rows(m, fold_of, fold, false);
      FeatureMatrix held_out = take_rows(m, fold_of, fold, true);
      if (fit_part.rows.empty() || held_out.rows.empty() || !both_classes(fit_part))
        throw DomainError("grid-search fold " + std::to_string(fold) +
                          " is unusable; fewer inner folds may help");
      TrainedModel model = train(fit_part, candidate);
      sum += accuracy(model, held_out);
    }
    result.entries.push_back({candidate, sum / double(folds)});
  }
  for (size_t i = 1; i < result.entries.size(); ++i) {
    if (result.entries[i].mean_accuracy > result.entries[result.best_index].mean_accuracy)
      result.best_index = i;  // strict >, so ties keep the first candidate
  }
  return result;
}

}  // namespace cmix
