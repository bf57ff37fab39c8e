#include <cmath>
#include <memory>

#include "cmix/learners.hpp"
#include "cmix/rng.hpp"

namespace cmix {

double rbf_kernel(const SparseVector& x, const SparseVector& y, double gamma) {
  if (x.dim != y.dim)
    throw DomainError("rbf_kernel: dimension mismatch (" + std::to_string(x.dim) + " vs " +
                      std::to_string(y.dim) + ")");
  return std::exp(-gamma * squared_distance(x, y));
}

double SvmModel::decision(const SparseVector& x) const {
  double f = b;
  for (size_t i = 0; i < support_vectors.size(); ++i)
    f += coef[i] * std::exp(-gamma * squared_distance(support_vectors[i], x));
  return f;
}

double SvmModel::dual_objective() const {
  // Terms with alpha == 0 vanish, so the support set carries the whole sum.
  double sum_alpha = 0, quad = 0;
  for (size_t i = 0; i < support_vectors.size(); ++i) {
    sum_alpha += std::abs(coef[i]);
    for (size_t j = 0; j < support_vectors.size(); ++j) {
      quad += coef[i] * coef[j] *
              std::exp(-gamma * squared_distance(support_vectors[i], support_vectors[j]));
    }
  }
  return sum_alpha - 0.5 * quad;
}

namespace {

// Lazily filled Gram rows. Everything fits when N <= 5000; beyond that the
// least recently used rows are dropped to stay inside a fixed byte budget.
// Callers hold rows via shared_ptr, so eviction can never pull a row out
// from under an in-flight update.
class KernelCache {
 public:
  using Row = std::shared_ptr<const std::vector<double>>;

  KernelCache(const std::vector<SparseVector>& rows, double gamma)
      : data_(rows), gamma_(gamma), n_(rows.size()), rows_(rows.size()), stamps_(rows.size(), 0) {
    norms_.reserve(n_);
    for (const SparseVector& r : data_) norms_.push_back(r.squared_norm());
    constexpr size_t kFullCacheLimit = 5000;
    constexpr size_t kByteBudget = 256u << 20;
    max_rows_ = n_ <= kFullCacheLimit ? n_ : std::max<size_t>(2, kByteBudget / (8 * n_));
  }

  Row row(size_t i) {
    if (!rows_[i]) {
      if (cached_ >= max_rows_) evict();
      auto r = std::make_shared<std::vector<double>>(n_);
      for (size_t j = 0; j < n_; ++j) (*r)[j] = kernel(i, j);
      rows_[i] = std::move(r);
      ++cached_;
    }
    stamps_[i] = ++clock_;
    return rows_[i];
  }

  double kernel(size_t i, size_t j) const {
    double d2 = norms_[i] + norms_[j] - 2.0 * dot(data_[i], data_[j]);
    if (d2 < 0) d2 = 0;
    return std::exp(-gamma_ * d2);
  }

 private:
  void evict() {
    size_t victim = n_;
    for (size_t i = 0; i < n_; ++i) {
      if (!rows_[i] || rows_[i].use_count() > 1) continue;  // absent or in use
      if (victim == n_ || stamps_[i] < stamps_[victim]) victim = i;
    }
    if (victim < n_) {
      rows_[victim].reset();
      --cached_;
    }
  }

  const std::vector<SparseVector>& data_;
  double gamma_;
  size_t n_;
  std::vector<Row> rows_;
  std::vector<uint64_t> stamps_;
  std::vector<double> norms_;
  size_t cached_ = 0;
  size_t max_rows_ = 0;
  uint64_t clock_ = 0;
};

class SmoSolver {
 public:
  SmoSolver(const FeatureMatrix& m, const SvmParams& p)
      : m_(m),
        c_(p.c),
        gamma_(p.gamma > 0 ? p.gamma : (m.dim > 0 ? 1.0 / double(m.dim) : 1.0)),
        tol_(p.tol),
        rng_(p.seed),
        cache_(m.rows, gamma_),
        n_(m.rows.size()) {
    if (c_ <= 0) throw DomainError("SVM C must be > 0");
    if (p.gamma < 0) throw DomainError("SVM gamma must be > 0");
    y_.reserve(n_);
    int64_t pos = 0;
    for (GenderLabel g : m.labels) {
      y_.push_back(g == GenderLabel::Male ? 1.0 : -1.0);
      if (g == GenderLabel::Male) ++pos;
    }
    if (pos == 0 || pos == int64_t(n_)) throw DomainError("SVM needs both classes in the training data");
    alpha_.assign(n_, 0.0);
    errors_.resize(n_);
    for (size_t i = 0; i < n_; ++i) errors_[i] = -y_[i];  // f == 0 initially
    max_sweeps_ = p.max_sweeps > 0 ? p.max_sweeps : int64_t(10 * n_);
  }

  SvmModel solve() {
    bool examine_all = true;
    int64_t sweeps = 0;
    bool converged = false;
    while (sweeps < max_sweeps_) {
      size_t changed = 0;
      for (size_t i = 0; i < n_; ++i) {
        if (!examine_all && (alpha_[i] <= 0 || alpha_[i] >= c_)) continue;
        changed += examine(i);
      }
      ++sweeps;
      if (examine_all) {
        if (changed == 0) {
          converged = true;
          break;
        }
        examine_all = false;
      } else if (changed == 0) {
        examine_all = true;
      }
    }

    SvmModel model;
    model.dim = m_.dim;
    model.gamma = gamma_;
    model.c = c_;
    model.b = b_;
    model.converged = converged;
    for (size_t i = 0; i < n_; ++i) {
      if (alpha_[i] > 0) {
        model.support_vectors.push_back(m_.rows[i]);
        model.coef.push_back(alpha_[i] * y_[i]);
      }
    }
    return model;
  }

 private:
  size_t examine(size_t i1) {
    double r1 = y_[i1] * errors_[i1];
    bool violates = (r1 < -tol_ && alpha_[i1] < c_) || (r1 > tol_ && alpha_[i1] > 0);
    if (!violates) return 0;
    size_t j = size_t(rng_.below(n_));
    if (j != i1 && take_step(i1, j)) return 1;
    size_t start = size_t(rng_.below(n_));
    for (size_t off = 0; off < n_; ++off) {
      size_t j2 = (start + off) % n_;
      if (j2 == i1 || j2 == j) continue;
      if (take_step(i1, j2)) return 1;
    }
    return 0;
  }

  bool take_step(size_t i1, size_t i2) {
    if (i1 == i2) return false;
    double a1 = alpha_[i1], a2 = alpha_[i2];
    double y1 = y_[i1], y2 = y_[i2];
    double e1 = errors_[i1], e2 = errors_[i2];
    double s = y1 * y2;

    double lo, hi;
    if (y1 != y2) {
      lo = std::max(0.0, a2 - a1);
      hi = std::min(c_, c_ + a2 - a1);
    } else {
      lo = std::max(0.0, a1 + a2 - c_);
      hi = std::min(c_, a1 + a2);
    }
    if (lo >= hi) return false;

    KernelCache::Row k1 = cache_.row(i1);
    double k11 = (*k1)[i1], k12 = (*k1)[i2];
    double k22 = (*cache_.row(i2))[i2];
    double eta = k11 + k22 - 2.0 * k12;

    double a2_new;
    if (eta > 0) {
      a2_new = a2 + y2 * (e1 - e2) / eta;
      if (a2_new < lo) a2_new = lo;
      else if (a2_new > hi) a2_new = hi;
    } else {
      // Flat direction (duplicated points): pick the better box endpoint.
      double v1 = e1 + y1 - b_;  // sum_k alpha_k y_k K(k, i1)
      double v2 = e2 + y2 - b_;
      double f1 = y1 * v1 - a1 * k11 - s * a2 * k12;
      double f2 = y2 * v2 - s * a1 * k12 - a2 * k22;
      double l1 = a1 + s * (a2 - lo);
      double h1 = a1 + s * (a2 - hi);
      double obj_lo = l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11 + 0.5 * lo * lo * k22 + s * lo * l1 * k12;
      double obj_hi = h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11 + 0.5 * hi * hi * k22 + s * hi * h1 * k12;
      if (obj_lo < obj_hi - 1e-12) a2_new = lo;
      else if (obj_lo > obj_hi + 1e-12) a2_new = hi;
      else return false;
    }
    if (std::abs(a2_new - a2) < 1e-12 * (a2_new + a2 + 1e-12)) return false;

    double a1_new = a1 + s * (a2 - a2_new);
    // Rounding can push a1 a hair outside the box.
    if (a1_new < 0) a1_new = 0;
    else if (a1_new > c_) a1_new = c_;

    double d1 = y1 * (a1_new - a1);
    double d2 = y2 * (a2_new - a2);
    double b1 = b_ - e1 - d1 * k11 - d2 * k12;
    double b2 = b_ - e2 - d1 * k12 - d2 * k22;
    double b_new;
    if (a1_new > 0 && a1_new < c_) b_new = b1;
    else if (a2_new > 0 && a2_new < c_) b_new = b2;
    else b_new = 0.5 * (b1 + b2);
    double db = b_new - b_;

    KernelCache::Row row1 = cache_.row(i1);
    KernelCache::Row row2 = cache_.row(i2);
    for (size_t k = 0; k < n_; ++k) errors_[k] += d1 * (*row1)[k] + d2 * (*row2)[k] + db;

    alpha_[i1] = a1_new;
    alpha_[i2] = a2_new;
    b_ = b_new;
    return true;
  }

  const FeatureMatrix& m_;
  double c_;
  double gamma_;
  double tol_;
  Rng rng_;
  KernelCache cache_;
  size_t n_;
  std::vector<double> y_;
  std::vector<double> alpha_;
  std::vector<double> errors_;
  double b_ = 0;
  int64_t max_sweeps_ = 0;
};

}  // namespace

TrainedModel train_svm_rbf(const FeatureMatrix& m, const SvmParams& p) {
  if (m.rows.empty()) throw DomainError("cannot train on an empty matrix");
  SmoSolver solver(m, p);
  return TrainedModel(solver.solve());
}

}  // namespace cmix
