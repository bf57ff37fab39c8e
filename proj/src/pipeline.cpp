#include "cmix/pipeline.hpp"

#include <fstream>
#include <sstream>

namespace cmix {

SparseVector Pipeline::features_of(const AnnotatedTweet& t) const {
  ProcessedTweet p = preprocess_tweet(t, spelling);
  SparseVector x = vectorize(p, vocabulary);
  if (has_mask()) x = apply_mask(x, mask);
  return x;
}

GenderLabel Pipeline::predict(const AnnotatedTweet& t) const {
  return model.predict(features_of(t));
}

Pipeline train_pipeline(const Corpus& c, Featureset set, const ModelSpec& spec,
                        const TrainOptions& opt, TrainSummary* summary) {
  if (c.tweets.empty()) throw DomainError("cannot train on an empty corpus");
  Pipeline p;
  p.spelling = opt.spelling;
  p.featureset = set;

  std::vector<ProcessedTweet> processed = preprocess_corpus(c, p.spelling);
  p.vocabulary = build_vocabulary(processed, opt.features, set);
  FeatureMatrix m = vectorize_all(processed, p.vocabulary);

  if (opt.select_k > 0 && m.dim > 0) {
    p.mask = chi_square_select(m, opt.select_k);
    m = apply_mask(m, p.mask);
  }

  ModelSpec chosen = spec;
  double grid_acc = 0;
  if (opt.grid) {
    GridResult gr = grid_search(default_grid(spec.kind, m.dim), m, opt.inner_folds, opt.seed);
    chosen = gr.entries[gr.best_index].spec;
    grid_acc = gr.entries[gr.best_index].mean_accuracy;
  }
  p.model = train(m, chosen);

  if (summary) {
    summary->fitted_dim = p.vocabulary.dim();
    summary->selected_dim = m.dim;
    summary->chosen_spec = chosen.describe();
    summary->grid_accuracy = grid_acc;
  }
  return p;
}

void save_pipeline(const Pipeline& p, std::ostream& out) {
  out << "cmix-pipeline 1\n";
  out << "featureset " << to_string(p.featureset) << "\n";
  out << "spelling " << p.spelling.size() << "\n";
  for (const auto& [variant, canonical] : p.spelling) out << variant << '\t' << canonical << "\n";
  out << "has_mask " << (p.has_mask() ? 1 : 0) << "\n";
  save_vocabulary(p.vocabulary, out);
  if (p.has_mask()) save_mask(p.mask, out);
  save_model(p.model, out);
}

Pipeline load_pipeline(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next = [&]() -> std::string {
    if (!std::getline(in, line)) throw ParseError(lineno, "unexpected end of pipeline data");
    ++lineno;
    return line;
  };
  if (next() != "cmix-pipeline 1") throw ParseError(lineno, "bad pipeline header");
  Pipeline p;
  {
    std::istringstream ls(next());
    std::string tag, name;
    ls >> tag >> name;
    if (tag != "featureset") throw ParseError(lineno, "expected featureset line");
    p.featureset = featureset_from_string(name);
  }
  {
    std::istringstream ls(next());
    std::string tag;
    size_t count = 0;
    ls >> tag >> count;
    if (!ls || tag != "spelling") throw ParseError(lineno, "expected spelling line");
    for (size_t i = 0; i < count; ++i) {
      std::string entry = next();
      size_t tab = entry.find('\t');
      if (tab == std::string::npos) throw ParseError(lineno, "bad spelling entry");
      p.spelling[entry.substr(0, tab)] = entry.substr(tab + 1);
    }
  }
  bool has_mask = false;
  {
    std::istringstream ls(next());
    std::string tag;
    int flag = 0;
    ls >> tag >> flag;
    if (!ls || tag != "has_mask") throw ParseError(lineno, "expected has_mask line");
    has_mask = flag != 0;
  }
  p.vocabulary = load_vocabulary(in);
  if (has_mask) p.mask = load_mask(in);
  p.model = load_model(in);
  if (p.has_mask()) {
    if (p.mask.original_dim != p.vocabulary.dim())
      throw DomainError("pipeline mask does not match its vocabulary");
    if (p.model.dim() != int(p.mask.kept.size()))
      throw DomainError("pipeline model does not match its mask");
  } else if (p.model.dim() != p.vocabulary.dim()) {
    throw DomainError("pipeline model does not match its vocabulary");
  }
  return p;
}

void save_pipeline_file(const Pipeline& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write file: " + path);
  save_pipeline(p, out);
}

Pipeline load_pipeline_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open file: " + path);
  return load_pipeline(in);
}

}  // namespace cmix
