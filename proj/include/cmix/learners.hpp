#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cmix/features.hpp"

namespace cmix {

enum class ModelKind { NaiveBayes, SvmRbf, RandomForest };

const char* to_string(ModelKind k);
ModelKind model_kind_from_string(const std::string& name);

struct NbParams {
  double alpha = 1.0;  // Laplace smoothing, > 0
};

struct SvmParams {
  double c = 10.0;
  double gamma = 0.0;      // 0 resolves to 1/dim at train time
  double tol = 1e-3;       // KKT tolerance
  int64_t max_sweeps = 0;  // 0 resolves to 10*N full sweeps
  uint64_t seed = 1;       // drives the random second-index choice
};

struct RfParams {
  int trees = 100;
  int max_depth = 0;  // 0 = unbounded
  int mtry = 0;       // 0 resolves to ceil(sqrt(dim))
  bool bootstrap = true;
  uint64_t seed = 1;
};

struct ModelSpec {
  ModelKind kind = ModelKind::NaiveBayes;
  NbParams nb;
  SvmParams svm;
  RfParams rf;

  std::string describe() const;
};

// --- fitted models ---

struct NbModel {
  int dim = 0;
  double alpha = 0;
  std::array<double, 2> log_prior{};               // [male, female]
  std::array<std::vector<double>, 2> log_lik{};    // per class, per feature

  // prior + sum(count * log-likelihood) per class.
  std::array<double, 2> log_scores(const SparseVector& x) const;
};

struct SvmModel {
  int dim = 0;
  double gamma = 0;
  double c = 0;
  double b = 0;
  bool converged = false;
  std::vector<SparseVector> support_vectors;
  std::vector<double> coef;  // alpha_i * y_i per support vector

  double decision(const SparseVector& x) const;
  // sum(alpha) - 1/2 sum alpha_i alpha_j y_i y_j K_ij over the support set.
  double dual_objective() const;
};

struct RfModel {
  struct Node {
    int feature = -1;       // -1 marks a leaf
    double threshold = 0;   // test: x[feature] >= threshold
    int left = -1;          // child when the test fails
    int right = -1;         // child when the test holds
    GenderLabel leaf = GenderLabel::Male;
  };
  struct Tree {
    std::vector<Node> nodes;  // nodes[0] is the root
    GenderLabel predict(const SparseVector& x) const;
  };
  int dim = 0;
  std::vector<Tree> trees;

  // Majority vote, ties to Male.
  GenderLabel predict(const SparseVector& x) const;
};

class TrainedModel {
 public:
  TrainedModel() = default;
  explicit TrainedModel(NbModel m) : model_(std::move(m)) {}
  explicit TrainedModel(SvmModel m) : model_(std::move(m)) {}
  explicit TrainedModel(RfModel m) : model_(std::move(m)) {}

  ModelKind kind() const;
  int dim() const;
  GenderLabel predict(const SparseVector& x) const;  // throws DomainError on dim mismatch

  const NbModel& nb() const { return std::get<NbModel>(model_); }
  const SvmModel& svm() const { return std::get<SvmModel>(model_); }
  const RfModel& rf() const { return std::get<RfModel>(model_); }

 private:
  std::variant<NbModel, SvmModel, RfModel> model_;
};

// exp(-gamma * ||x - y||^2); dimensions must match.
double rbf_kernel(const SparseVector& x, const SparseVector& y, double gamma);

// Multinomial NB with Laplace smoothing. Both classes must be present.
TrainedModel train_naive_bayes(const FeatureMatrix& m, const NbParams& p);

// Soft-margin RBF SVM solved by SMO: first index by KKT violation, second
// index random (seeded) with a full scan fallback. Male maps to +1. If the
// sweep budget runs out before a clean pass, the model comes back with
// converged == false.
TrainedModel train_svm_rbf(const FeatureMatrix& m, const SvmParams& p);

// Gini-split forest over bootstrap samples; mtry features per node; ties on
// votes and on leaf majorities go to Male.
TrainedModel train_random_forest(const FeatureMatrix& m, const RfParams& p);

TrainedModel train(const FeatureMatrix& m, const ModelSpec& spec);

GenderLabel predict(const TrainedModel& model, const SparseVector& x);

double accuracy(const TrainedModel& model, const FeatureMatrix& m);

// --- grid search ---

struct GridResult {
  struct Entry {
    ModelSpec spec;
    double mean_accuracy = 0;
  };
  std::vector<Entry> entries;  // grid order
  size_t best_index = 0;       // max accuracy, first in grid on ties
};

// Evaluates each candidate by author-grouped CV over the given matrix and
// returns the grid with the winner marked.
GridResult grid_search(const std::vector<ModelSpec>& grid, const FeatureMatrix& m,
                       int folds, uint64_t seed);

// The conventional default grids; dim is needed for the 1/D gamma candidate.
std::vector<ModelSpec> default_grid(ModelKind kind, int dim);

// --- persistence ---

void save_model(const TrainedModel& m, std::ostream& out);
TrainedModel load_model(std::istream& in);

}  // namespace cmix
