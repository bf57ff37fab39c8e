#include "cmix/learners.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace cmix {

const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::NaiveBayes: return "nb";
    case ModelKind::SvmRbf: return "svm";
    case ModelKind::RandomForest: return "rf";
  }
  return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
  if (name == "nb" || name == "naive-bayes") return ModelKind::NaiveBayes;
  if (name == "svm" || name == "svm-rbf") return ModelKind::SvmRbf;
  if (name == "rf" || name == "random-forest") return ModelKind::RandomForest;
  throw DomainError("unknown classifier '" + name + "' (expected nb, svm or rf)");
}

std::string ModelSpec::describe() const {
  char buf[160];
  switch (kind) {
    case ModelKind::NaiveBayes:
      std::snprintf(buf, sizeof(buf), "nb(alpha=%g)", nb.alpha);
      break;
    case ModelKind::SvmRbf:
      std::snprintf(buf, sizeof(buf), "svm(C=%g,gamma=%g,tol=%g,seed=%llu)", svm.c, svm.gamma,
                    svm.tol, static_cast<unsigned long long>(svm.seed));
      break;
    case ModelKind::RandomForest:
      std::snprintf(buf, sizeof(buf), "rf(trees=%d,depth=%d,mtry=%d,bootstrap=%d,seed=%llu)",
                    rf.trees, rf.max_depth, rf.mtry, rf.bootstrap ? 1 : 0,
                    static_cast<unsigned long long>(rf.seed));
      break;
  }
  return buf;
}

ModelKind TrainedModel::kind() const {
  if (std::holds_alternative<NbModel>(model_)) return ModelKind::NaiveBayes;
  if (std::holds_alternative<SvmModel>(model_)) return ModelKind::SvmRbf;
  return ModelKind::RandomForest;
}

int TrainedModel::dim() const {
  return std::visit([](const auto& m) { return m.dim; }, model_);
}

GenderLabel TrainedModel::predict(const SparseVector& x) const {
  if (x.dim != dim())
    throw DomainError("predict: vector dimension " + std::to_string(x.dim) +
                      " does not match model dimension " + std::to_string(dim()));
  if (const NbModel* nb = std::get_if<NbModel>(&model_)) {
    auto s = nb->log_scores(x);
    return s[0] >= s[1] ? GenderLabel::Male : GenderLabel::Female;  // tie -> Male
  }
  if (const SvmModel* svm = std::get_if<SvmModel>(&model_)) {
    return svm->decision(x) >= 0 ? GenderLabel::Male : GenderLabel::Female;
  }
  return std::get<RfModel>(model_).predict(x);
}

GenderLabel predict(const TrainedModel& model, const SparseVector& x) { return model.predict(x); }

TrainedModel train(const FeatureMatrix& m, const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelKind::NaiveBayes: return train_naive_bayes(m, spec.nb);
    case ModelKind::SvmRbf: return train_svm_rbf(m, spec.svm);
    case ModelKind::RandomForest: return train_random_forest(m, spec.rf);
  }
  throw DomainError("unknown model kind");
}

double accuracy(const TrainedModel& model, const FeatureMatrix& m) {
  if (m.rows.empty()) throw DomainError("accuracy over an empty matrix is undefined");
  size_t correct = 0;
  for (size_t i = 0; i < m.rows.size(); ++i) {
    if (model.predict(m.rows[i]) == m.labels[i]) ++correct;
  }
  return double(correct) / double(m.rows.size());
}

std::vector<ModelSpec> default_grid(ModelKind kind, int dim) {
  std::vector<ModelSpec> grid;
  switch (kind) {
    case ModelKind::NaiveBayes:
      for (double a : {0.1, 0.5, 1.0}) {
        ModelSpec s;
        s.kind = kind;
        s.nb.alpha = a;
        grid.push_back(s);
      }
      break;
    case ModelKind::SvmRbf:
      for (double c : {0.1, 1.0, 10.0, 100.0}) {
        for (double g : {1e-3, 1e-2, 1e-1, dim > 0 ? 1.0 / double(dim) : 1.0}) {
          ModelSpec s;
          s.kind = kind;
          s.svm.c = c;
          s.svm.gamma = g;
          grid.push_back(s);
        }
      }
      break;
    case ModelKind::RandomForest:
      for (int depth : {0, 20}) {
        ModelSpec s;
        s.kind = kind;
        s.rf.trees = 100;
        s.rf.max_depth = depth;
        grid.push_back(s);
      }
      break;
  }
  return grid;
}

// --- persistence ---

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class LineParser {
 public:
  explicit LineParser(std::istream& in) : in_(in) {}

  std::istringstream line() {
    std::string raw;
    if (!std::getline(in_, raw)) throw ParseError(lineno_, "unexpected end of model data");
    ++lineno_;
    return std::istringstream(raw);
  }

  // Reads a line expected to start with `tag`; returns the remainder stream.
  std::istringstream expect(const std::string& tag) {
    std::istringstream ls = line();
    std::string t;
    ls >> t;
    if (t != tag) throw ParseError(lineno_, "expected '" + tag + "' line, got '" + t + "'");
    return ls;
  }

  int lineno() const { return lineno_; }

 private:
  std::istream& in_;
  int lineno_ = 0;
};

void save_sparse(const SparseVector& x, std::ostream& out) {
  out << x.entries.size();
  for (const auto& [j, v] : x.entries) out << ' ' << j << ':' << fmt_double(v);
}

SparseVector load_sparse(std::istringstream& ls, int dim, int lineno) {
  SparseVector x;
  x.dim = dim;
  size_t nnz;
  ls >> nnz;
  if (!ls) throw ParseError(lineno, "bad sparse vector entry count");
  x.entries.reserve(nnz);
  for (size_t k = 0; k < nnz; ++k) {
    std::string pair;
    ls >> pair;
    size_t colon = pair.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "bad sparse entry '" + pair + "'");
    x.entries.emplace_back(std::stoi(pair.substr(0, colon)), std::stod(pair.substr(colon + 1)));
  }
  return x;
}

}  // namespace

void save_model(const TrainedModel& m, std::ostream& out) {
  out << "cmix-model 1\n";
  out << "kind " << to_string(m.kind()) << "\n";
  out << "dim " << m.dim() << "\n";
  switch (m.kind()) {
    case ModelKind::NaiveBayes: {
      const NbModel& nb = m.nb();
      out << "alpha " << fmt_double(nb.alpha) << "\n";
      out << "prior " << fmt_double(nb.log_prior[0]) << ' ' << fmt_double(nb.log_prior[1]) << "\n";
      for (int g = 0; g < 2; ++g) {
        out << "lik " << g;
        for (double v : nb.log_lik[size_t(g)]) out << ' ' << fmt_double(v);
        out << "\n";
      }
      break;
    }
    case ModelKind::SvmRbf: {
      const SvmModel& svm = m.svm();
      out << "gamma " << fmt_double(svm.gamma) << "\n";
      out << "c " << fmt_double(svm.c) << "\n";
      out << "b " << fmt_double(svm.b) << "\n";
      out << "converged " << (svm.converged ? 1 : 0) << "\n";
      out << "nsv " << svm.support_vectors.size() << "\n";
      for (size_t i = 0; i < svm.support_vectors.size(); ++i) {
        out << "sv " << fmt_double(svm.coef[i]) << ' ';
        save_sparse(svm.support_vectors[i], out);
        out << "\n";
      }
      break;
    }
    case ModelKind::RandomForest: {
      const RfModel& rf = m.rf();
      out << "trees " << rf.trees.size() << "\n";
      for (const RfModel::Tree& t : rf.trees) {
        out << "tree " << t.nodes.size() << "\n";
        for (const RfModel::Node& n : t.nodes) {
          out << "node " << n.feature << ' ' << fmt_double(n.threshold) << ' ' << n.left << ' '
              << n.right << ' ' << (n.leaf == GenderLabel::Male ? 0 : 1) << "\n";
        }
      }
      break;
    }
  }
}

TrainedModel load_model(std::istream& in) {
  LineParser lp(in);
  {
    std::istringstream header = lp.line();
    if (header.str() != "cmix-model 1") throw ParseError(lp.lineno(), "bad model header");
  }
  std::string kind_name;
  lp.expect("kind") >> kind_name;
  ModelKind kind = model_kind_from_string(kind_name);
  int dim = -1;
  lp.expect("dim") >> dim;
  if (dim < 0) throw ParseError(lp.lineno(), "bad model dimension");

  switch (kind) {
    case ModelKind::NaiveBayes: {
      NbModel nb;
      nb.dim = dim;
      lp.expect("alpha") >> nb.alpha;
      lp.expect("prior") >> nb.log_prior[0] >> nb.log_prior[1];
      for (int g = 0; g < 2; ++g) {
        auto ls = lp.expect("lik");
        int tag;
        ls >> tag;
        if (tag != g) throw ParseError(lp.lineno(), "lik lines out of order");
        nb.log_lik[size_t(g)].resize(size_t(dim));
        for (int j = 0; j < dim; ++j) {
          ls >> nb.log_lik[size_t(g)][size_t(j)];
          if (!ls) throw ParseError(lp.lineno(), "truncated likelihood row");
        }
      }
      return TrainedModel(std::move(nb));
    }
    case ModelKind::SvmRbf: {
      SvmModel svm;
      svm.dim = dim;
      lp.expect("gamma") >> svm.gamma;
      lp.expect("c") >> svm.c;
      lp.expect("b") >> svm.b;
      int conv = 0;
      lp.expect("converged") >> conv;
      svm.converged = conv != 0;
      size_t nsv = 0;
      lp.expect("nsv") >> nsv;
      for (size_t i = 0; i < nsv; ++i) {
        auto ls = lp.expect("sv");
        double coef;
        ls >> coef;
        svm.coef.push_back(coef);
        svm.support_vectors.push_back(load_sparse(ls, dim, lp.lineno()));
      }
      return TrainedModel(std::move(svm));
    }
    case ModelKind::RandomForest: {
      RfModel rf;
      rf.dim = dim;
      size_t trees = 0;
      lp.expect("trees") >> trees;
      for (size_t t = 0; t < trees; ++t) {
        size_t nodes = 0;
        lp.expect("tree") >> nodes;
        RfModel::Tree tree;
        tree.nodes.reserve(nodes);
        for (size_t k = 0; k < nodes; ++k) {
          auto ls = lp.expect("node");
          RfModel::Node n;
          int leaf = 0;
          ls >> n.feature >> n.threshold >> n.left >> n.right >> leaf;
          if (!ls) throw ParseError(lp.lineno(), "bad node line");
          n.leaf = leaf == 0 ? GenderLabel::Male : GenderLabel::Female;
          tree.nodes.push_back(n);
        }
        rf.trees.push_back(std::move(tree));
      }
      return TrainedModel(std::move(rf));
    }
  }
  throw ParseError(lp.lineno(), "unreachable model kind");
}

}  // namespace cmix
