#include "cmix/evaluation.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

#include "cmix/rng.hpp"

namespace cmix {

std::vector<int> group_rows_by_author(const std::vector<std::string>& authors, int k,
                                      uint64_t seed) {
  if (k < 2) throw DomainError("fold count must be at least 2");
  std::vector<std::string> distinct(authors.begin(), authors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (int(distinct.size()) < k)
    throw DomainError("only " + std::to_string(distinct.size()) + " distinct authors for " +
                      std::to_string(k) + " folds; pass a smaller fold count");
  Rng rng(seed);
  rng.shuffle(distinct);
  std::map<std::string, int> author_fold;
  for (size_t i = 0; i < distinct.size(); ++i) author_fold[distinct[i]] = int(i % size_t(k));
  std::vector<int> row_fold;
  row_fold.reserve(authors.size());
  for (const std::string& a : authors) row_fold.push_back(author_fold.at(a));
  return row_fold;
}

FoldAssignment make_grouped_folds(const Corpus& c, int k, uint64_t seed) {
  FoldAssignment fa;
  fa.k = k;
  std::vector<std::string> authors;
  authors.reserve(c.tweets.size());
  for (const AnnotatedTweet& t : c.tweets) authors.push_back(t.author_id);
  fa.tweet_fold = group_rows_by_author(authors, k, seed);
  for (size_t i = 0; i < authors.size(); ++i) fa.author_fold[authors[i]] = fa.tweet_fold[i];
  return fa;
}

namespace {

struct FoldOutcome {
  double accuracy = 0;
  int test_size = 0;
  FoldConfusion confusion;
};

// Indices of corpus positions in a fold partition, ordered by tweet id so
// downstream training never sees file order.
std::vector<size_t> partition_indices(const Corpus& c, const FoldAssignment& folds, int fold,
                                      bool test) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < c.tweets.size(); ++i) {
    if ((folds.tweet_fold[i] == fold) == test) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return c.tweets[a].id < c.tweets[b].id;
  });
  return idx;
}

std::vector<ProcessedTweet> gather(const std::vector<ProcessedTweet>& all,
                                   const std::vector<size_t>& idx) {
  std::vector<ProcessedTweet> out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(all[i]);
  return out;
}

ModelSpec resolve_spec_by_grid(const ModelSpec& spec, const FeatureMatrix& train,
                               const EvalOptions& opt, uint64_t fold_seed) {
  std::vector<ModelSpec> grid = default_grid(spec.kind, train.dim);
  GridResult gr = grid_search(grid, train, opt.inner_folds, fold_seed);
  return gr.entries[gr.best_index].spec;
}

FoldOutcome evaluate_fold(const Corpus& c, const std::vector<ProcessedTweet>& processed,
                          Featureset set, const ModelSpec& spec, const FoldAssignment& folds,
                          const EvalOptions& opt, int fold, const FoldInspector& inspect) {
  std::vector<size_t> train_idx = partition_indices(c, folds, fold, false);
  std::vector<size_t> test_idx = partition_indices(c, folds, fold, true);
  if (train_idx.empty() || test_idx.empty())
    throw DomainError("fold " + std::to_string(fold) + " has an empty partition");

  std::vector<ProcessedTweet> train_view = gather(processed, train_idx);
  std::vector<ProcessedTweet> test_view = gather(processed, test_idx);

  bool train_male = false, train_female = false;
  for (const ProcessedTweet& t : train_view) {
    (t.gender == GenderLabel::Male ? train_male : train_female) = true;
  }
  if (!train_male || !train_female)
    throw DomainError("training partition of fold " + std::to_string(fold) +
                      " lacks one of the classes");

  // Fit artifacts. The fit span is the whole corpus only under --global-fit.
  std::span<const ProcessedTweet> fit_span(train_view);
  if (opt.global_fit) fit_span = std::span<const ProcessedTweet>(processed);

  Vocabulary vocab;
  PartitionedVocabulary part;
  RefTokenTable ref_table = fit_reference_tokens(fit_span, opt.features.ref_tokens);
  FeatureMatrix train_m, test_m;
  if (opt.partitioned) {
    part = fit_partitioned(fit_span, opt.features, set);
    train_m = vectorize_all_partitioned(train_view, part);
    test_m = vectorize_all_partitioned(test_view, part);
  } else {
    vocab = build_vocabulary(fit_span, opt.features, set);
    train_m = vectorize_all(train_view, vocab);
    test_m = vectorize_all(test_view, vocab);
  }

  SelectionMask mask;
  bool selected = false;
  if (opt.select_k > 0 && train_m.dim > 0) {
    mask = chi_square_select(train_m, opt.select_k);
    train_m = apply_mask(train_m, mask);
    test_m = apply_mask(test_m, mask);
    selected = true;
  }

  ModelSpec chosen = spec;
  if (opt.grid) chosen = resolve_spec_by_grid(spec, train_m, opt, mix_seed(opt.seed, uint64_t(fold)));

  if (inspect) {
    FoldArtifacts art;
    art.fold = fold;
    art.train_indices = train_idx;
    art.test_indices = test_idx;
    art.vocabulary = opt.partitioned ? nullptr : &vocab;
    art.partitioned = opt.partitioned ? &part : nullptr;
    art.ref_table = &ref_table;
    art.mask = selected ? &mask : nullptr;
    art.chosen_spec = &chosen;
    inspect(art);
  }

  TrainedModel model = train(train_m, chosen);
  FoldOutcome out;
  out.test_size = int(test_m.rows.size());
  int64_t correct = 0;
  for (size_t i = 0; i < test_m.rows.size(); ++i) {
    GenderLabel got = model.predict(test_m.rows[i]);
    GenderLabel want = test_m.labels[i];
    if (got == want) ++correct;
    if (want == GenderLabel::Male) {
      (got == GenderLabel::Male ? out.confusion.male_as_male : out.confusion.male_as_female)++;
    } else {
      (got == GenderLabel::Female ? out.confusion.female_as_female : out.confusion.female_as_male)++;
    }
  }
  out.accuracy = double(correct) / double(test_m.rows.size());
  return out;
}

std::string make_fingerprint(Featureset set, const ModelSpec& spec, const FoldAssignment& folds,
                             const EvalOptions& opt) {
  std::ostringstream os;
  const FeatureConfig& f = opt.features;
  os << "featureset=" << to_string(set) << " model=" << spec.describe() << " folds=" << folds.k
     << " seed=" << opt.seed << " select_k=" << opt.select_k << " char=[" << f.char_ngrams.n_min
     << ',' << f.char_ngrams.n_max << ",min" << f.char_ngrams.min_freq << "]"
     << " word=[" << f.word_ngrams.n_min << ',' << f.word_ngrams.n_max << ",min"
     << f.word_ngrams.min_freq << "]"
     << " ref=[share" << f.ref_tokens.min_share << ",min" << f.ref_tokens.min_freq << "]"
     << " hashtag_k=" << f.hashtag_top_k;
  if (opt.partitioned) os << " partitioned";
  if (opt.global_fit) os << " global-fit";
  if (opt.grid) os << " grid(inner=" << opt.inner_folds << ")";
  return os.str();
}

}  // namespace

CVReport cross_validate(const Corpus& c, Featureset set, const ModelSpec& spec,
                        const FoldAssignment& folds, const EvalOptions& opt,
                        const FoldInspector& inspect) {
  if (folds.k < 2) throw DomainError("fold count must be at least 2");
  if (folds.tweet_fold.size() != c.tweets.size())
    throw DomainError("fold assignment does not match the corpus");

  std::vector<ProcessedTweet> processed = preprocess_corpus(c, opt.spelling);

  CVReport report;
  report.k = folds.k;
  report.fold_accuracy.resize(size_t(folds.k));
  report.fold_test_size.resize(size_t(folds.k));
  report.confusion.resize(size_t(folds.k));
  report.fingerprint = make_fingerprint(set, spec, folds, opt);

  auto run_fold = [&](int fold) {
    return evaluate_fold(c, processed, set, spec, folds, opt, fold, inspect);
  };

  if (opt.jobs > 1) {
    std::vector<std::future<FoldOutcome>> futures;
    futures.reserve(size_t(folds.k));
    for (int fold = 0; fold < folds.k; ++fold)
      futures.push_back(std::async(std::launch::async, run_fold, fold));
    for (int fold = 0; fold < folds.k; ++fold) {
      FoldOutcome o = futures[size_t(fold)].get();
      report.fold_accuracy[size_t(fold)] = o.accuracy;
      report.fold_test_size[size_t(fold)] = o.test_size;
      report.confusion[size_t(fold)] = o.confusion;
    }
  } else {
    for (int fold = 0; fold < folds.k; ++fold) {
      FoldOutcome o = run_fold(fold);
      report.fold_accuracy[size_t(fold)] = o.accuracy;
      report.fold_test_size[size_t(fold)] = o.test_size;
      report.confusion[size_t(fold)] = o.confusion;
    }
  }

  double sum = 0;
  for (double a : report.fold_accuracy) sum += a;
  report.mean_accuracy = sum / double(folds.k);
  return report;
}

const std::array<Featureset, 5> kExperimentRows = {
    Featureset::CharNgrams, Featureset::BagOfWords, Featureset::RefTokens,
    Featureset::TopHashtags, Featureset::All};

const std::array<ModelKind, 3> kExperimentCols = {ModelKind::NaiveBayes, ModelKind::SvmRbf,
                                                  ModelKind::RandomForest};

const std::array<std::array<double, 3>, 5> kPublishedBaseline = {{
    {87.3, 89.7, 85.6},  // character n-grams
    {78.3, 83.6, 84.5},  // bag of words
    {71.0, 87.5, 85.8},  // reference tokens
    {54.5, 56.4, 54.6},  // top hashtags
    {85.0, 89.5, 88.4},  // all features
}};

ExperimentTable run_experiment_table(const Corpus& c, const std::array<ModelSpec, 3>& specs,
                                     const FoldAssignment& folds, const EvalOptions& opt) {
  ExperimentTable table;
  for (size_t r = 0; r < kExperimentRows.size(); ++r) {
    for (size_t col = 0; col < kExperimentCols.size(); ++col) {
      CVReport rep = cross_validate(c, kExperimentRows[r], specs[col], folds, opt);
      table.cells[r][col] = rep.mean_accuracy;
    }
  }
  std::ostringstream os;
  os << "folds=" << folds.k << " seed=" << opt.seed << " select_k=" << opt.select_k << " specs=["
     << specs[0].describe() << "; " << specs[1].describe() << "; " << specs[2].describe() << "]";
  if (opt.grid) os << " grid(inner=" << opt.inner_folds << ")";
  table.fingerprint = os.str();
  return table;
}

}  // namespace cmix
