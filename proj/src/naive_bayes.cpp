#include <cmath>

#include "cmix/learners.hpp"

namespace cmix {

std::array<double, 2> NbModel::log_scores(const SparseVector& x) const {
  std::array<double, 2> s = {log_prior[0], log_prior[1]};
  for (const auto& [j, v] : x.entries) {
    s[0] += v * log_lik[0][size_t(j)];
    s[1] += v * log_lik[1][size_t(j)];
  }
  return s;
}

TrainedModel train_naive_bayes(const FeatureMatrix& m, const NbParams& p) {
  if (p.alpha <= 0) throw DomainError("naive Bayes smoothing alpha must be > 0");
  if (m.rows.empty()) throw DomainError("cannot train on an empty matrix");

  int64_t class_docs[2] = {0, 0};
  // Feature totals stay integral, so the fitted parameters are exact
  // functions of the counts and independent of row order.
  std::vector<int64_t> counts[2];
  counts[0].assign(size_t(m.dim), 0);
  counts[1].assign(size_t(m.dim), 0);
  for (size_t r = 0; r < m.rows.size(); ++r) {
    int g = m.labels[r] == GenderLabel::Male ? 0 : 1;
    ++class_docs[g];
    for (const auto& [j, v] : m.rows[r].entries) counts[g][size_t(j)] += int64_t(v);
  }
  if (class_docs[0] == 0 || class_docs[1] == 0)
    throw DomainError("naive Bayes needs both classes in the training data");

  NbModel model;
  model.dim = m.dim;
  model.alpha = p.alpha;
  double n = double(m.rows.size());
  for (int g = 0; g < 2; ++g) {
    model.log_prior[size_t(g)] = std::log(double(class_docs[g]) / n);
    int64_t total = 0;
    for (int64_t c : counts[g]) total += c;
    double denom = double(total) + p.alpha * double(m.dim);
    model.log_lik[size_t(g)].resize(size_t(m.dim));
    for (int j = 0; j < m.dim; ++j)
      model.log_lik[size_t(g)][size_t(j)] = std::log((double(counts[g][size_t(j)]) + p.alpha) / denom);
  }
  return TrainedModel(std::move(model));
}

}  // namespace cmix
