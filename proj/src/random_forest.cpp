#include <algorithm>
#include <cmath>
#include <set>

#include "cmix/learners.hpp"
#include "cmix/rng.hpp"

namespace cmix {

namespace {

double lookup(const SparseVector& x, int feature) {
  auto it = std::lower_bound(x.entries.begin(), x.entries.end(), feature,
                             [](const auto& e, int f) { return e.first < f; });
  return (it != x.entries.end() && it->first == feature) ? it->second : 0.0;
}

}  // namespace

GenderLabel RfModel::Tree::predict(const SparseVector& x) const {
  int at = 0;
  for (;;) {
    const Node& n = nodes[size_t(at)];
    if (n.feature < 0) return n.leaf;
    at = lookup(x, n.feature) >= n.threshold ? n.right : n.left;
  }
}

GenderLabel RfModel::predict(const SparseVector& x) const {
  int male = 0, female = 0;
  for (const Tree& t : trees) (t.predict(x) == GenderLabel::Male ? male : female)++;
  return male >= female ? GenderLabel::Male : GenderLabel::Female;
}

namespace {

// Column-major dense copy; node split search scans columns.
struct DenseColumns {
  size_t n = 0;
  std::vector<double> values;  // values[feature * n + row]

  DenseColumns(const FeatureMatrix& m) : n(m.rows.size()) {
    if (double(n) * double(m.dim) > 2e8)
      throw DomainError("feature matrix too large for forest training; select fewer features");
    values.assign(n * size_t(m.dim), 0.0);
    for (size_t r = 0; r < n; ++r) {
      for (const auto& [j, v] : m.rows[r].entries) values[size_t(j) * n + r] = v;
    }
  }

  double at(size_t row, int feature) const { return values[size_t(feature) * n + row]; }
};

class TreeBuilder {
 public:
  TreeBuilder(const FeatureMatrix& m, const DenseColumns& cols, const RfParams& p, int mtry, Rng& rng)
      : m_(m), cols_(cols), p_(p), mtry_(mtry), rng_(rng) {}

  RfModel::Tree build(std::vector<size_t> rows) {
    RfModel::Tree tree;
    grow(tree, std::move(rows), 0);
    return tree;
  }

 private:
  GenderLabel majority(size_t male, size_t female) const {
    return male >= female ? GenderLabel::Male : GenderLabel::Female;
  }

  // Distinct features, ascending (ties in the split search then resolve to
  // the lowest feature index).
  std::vector<int> sample_features() {
    int d = m_.dim;
    if (mtry_ >= d) {
      std::vector<int> all(static_cast<size_t>(d), 0);
      for (int j = 0; j < d; ++j) all[size_t(j)] = j;
      return all;
    }
    std::set<int> chosen;
    for (int top = d - mtry_; top < d; ++top) {
      int r = int(rng_.below(uint64_t(top) + 1));
      if (!chosen.insert(r).second) chosen.insert(top);
    }
    return std::vector<int>(chosen.begin(), chosen.end());
  }

  int grow(RfModel::Tree& tree, std::vector<size_t> rows, int depth) {
    size_t male = 0, female = 0;
    for (size_t r : rows) (m_.labels[r] == GenderLabel::Male ? male : female)++;

    int self = int(tree.nodes.size());
    tree.nodes.emplace_back();
    bool depth_capped = p_.max_depth > 0 && depth >= p_.max_depth;
    if (male == 0 || female == 0 || rows.size() < 2 || depth_capped) {
      tree.nodes[size_t(self)].leaf = majority(male, female);
      return self;
    }

    int best_feature = -1;
    double best_threshold = 0, best_gini = 2.0;
    std::vector<std::pair<double, GenderLabel>> sorted;
    for (int feature : sample_features()) {
      sorted.clear();
      sorted.reserve(rows.size());
      for (size_t r : rows) sorted.emplace_back(cols_.at(r, feature), m_.labels[r]);
      std::sort(sorted.begin(), sorted.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      // Sweep thresholds at each distinct value; left partition is x < t.
      size_t lm = 0, lf = 0;
      double total = double(rows.size());
      for (size_t k = 0; k < sorted.size(); ++k) {
        if (k > 0 && sorted[k].first != sorted[k - 1].first) {
          double nl = double(k), nr = total - nl;
          double rm = double(male) - double(lm), rf = double(female) - double(lf);
          double gl = 1.0 - (double(lm) / nl) * (double(lm) / nl) - (double(lf) / nl) * (double(lf) / nl);
          double gr = 1.0 - (rm / nr) * (rm / nr) - (rf / nr) * (rf / nr);
          double g = (nl * gl + nr * gr) / total;
          if (g < best_gini - 1e-12) {
            best_gini = g;
            best_feature = feature;
            best_threshold = sorted[k].first;
          }
        }
        (sorted[k].second == GenderLabel::Male ? lm : lf)++;
      }
    }

    if (best_feature < 0) {
      tree.nodes[size_t(self)].leaf = majority(male, female);
      return self;
    }

    std::vector<size_t> left, right;
    for (size_t r : rows) {
      (cols_.at(r, best_feature) >= best_threshold ? right : left).push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    tree.nodes[size_t(self)].feature = best_feature;
    tree.nodes[size_t(self)].threshold = best_threshold;
    int l = grow(tree, std::move(left), depth + 1);
    int r = grow(tree, std::move(right), depth + 1);
    tree.nodes[size_t(self)].left = l;
    tree.nodes[size_t(self)].right = r;
    return self;
  }

  const FeatureMatrix& m_;
  const DenseColumns& cols_;
  const RfParams& p_;
  int mtry_;
  Rng& rng_;
};

}  // namespace

TrainedModel train_random_forest(const FeatureMatrix& m, const RfParams& p) {
  if (m.rows.empty()) throw DomainError("cannot train on an empty matrix");
  if (p.trees < 1) throw DomainError("forest needs at least one tree");
  if (p.mtry > m.dim) throw DomainError("mtry exceeds the feature dimension");
  int64_t male = 0, female = 0;
  for (GenderLabel g : m.labels) (g == GenderLabel::Male ? male : female)++;
  if (male == 0 || female == 0)
    throw DomainError("random forest needs both classes in the training data");

  int mtry = p.mtry > 0 ? p.mtry : int(std::ceil(std::sqrt(double(m.dim))));
  if (mtry > m.dim) mtry = m.dim;

  DenseColumns cols(m);
  RfModel model;
  model.dim = m.dim;
  size_t n = m.rows.size();
  for (int t = 0; t < p.trees; ++t) {
    Rng rng(mix_seed(p.seed, uint64_t(t)));
    std::vector<size_t> rows;
    rows.reserve(n);
    if (p.bootstrap) {
      for (size_t i = 0; i < n; ++i) rows.push_back(size_t(rng.below(n)));
    } else {
      for (size_t i = 0; i < n; ++i) rows.push_back(i);
    }
    TreeBuilder builder(m, cols, p, mtry, rng);
    model.trees.push_back(builder.build(std::move(rows)));
  }
  return TrainedModel(std::move(model));
}

}  // namespace cmix
