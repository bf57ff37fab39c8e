// cmix — gender prediction for English-Hindi code-mixed tweets.
//
// Subcommands: validate | stats | ingest | train | evaluate | experiment |
// generate. Exit codes: 0 success, 1 domain error, 2 I/O or parse error.
// Every randomized step takes --seed (default 1), so runs are reproducible.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmix/datagen.hpp"
#include "cmix/evaluation.hpp"
#include "cmix/pipeline.hpp"
#include "cmix/preprocess.hpp"
#include "cmix/textutil.hpp"

using namespace cmix;
using nlohmann::json;

namespace {

constexpr uint64_t kDefaultSeed = 1;

struct FeatureFlags {
  FeatureConfig config;
  int select_k = 1000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--char-n-min", config.char_ngrams.n_min, "smallest char n-gram order");
    cmd->add_option("--char-n-max", config.char_ngrams.n_max, "largest char n-gram order");
    cmd->add_option("--char-min-freq", config.char_ngrams.min_freq,
                    "training frequency floor for char n-grams");
    cmd->add_flag("--char-pad", config.char_ngrams.pad, "pad tokens with boundary sentinels");
    cmd->add_option("--word-min-freq", config.word_ngrams.min_freq,
                    "training frequency floor for word n-grams");
    cmd->add_option("--ref-min-freq", config.ref_tokens.min_freq,
                    "training frequency floor for reference tokens");
    cmd->add_option("--ref-min-share", config.ref_tokens.min_share,
                    "dominant-class share threshold for reference tokens");
    cmd->add_option("--top-hashtags", config.hashtag_top_k, "hashtag vocabulary size");
    cmd->add_option("--select", select_k, "chi-square selection budget (0 disables)");
  }
};

struct ModelFlags {
  double nb_alpha = 1.0;
  double svm_c = 10.0;
  double svm_gamma = 0.0;  // 0 -> 1/dim
  double svm_tol = 1e-3;
  int rf_trees = 100;
  int rf_depth = 0;
  int rf_mtry = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--nb-alpha", nb_alpha, "naive Bayes smoothing");
    cmd->add_option("--svm-c", svm_c, "SVM soft-margin C");
    cmd->add_option("--svm-gamma", svm_gamma, "RBF gamma (0 = 1/dim)");
    cmd->add_option("--svm-tol", svm_tol, "SMO KKT tolerance");
    cmd->add_option("--rf-trees", rf_trees, "forest size");
    cmd->add_option("--rf-depth", rf_depth, "tree depth cap (0 = unbounded)");
    cmd->add_option("--rf-mtry", rf_mtry, "features per split (0 = sqrt(dim))");
  }

  ModelSpec spec(ModelKind kind, uint64_t seed) const {
    ModelSpec s;
    s.kind = kind;
    s.nb.alpha = nb_alpha;
    s.svm.c = svm_c;
    s.svm.gamma = svm_gamma;
    s.svm.tol = svm_tol;
    s.svm.seed = seed;
    s.rf.trees = rf_trees;
    s.rf.max_depth = rf_depth;
    s.rf.mtry = rf_mtry;
    s.rf.seed = seed;
    return s;
  }
};

SpellingMap spelling_from(const std::string& path) {
  if (path.empty()) return default_spelling_map();
  return load_spelling_map_file(path);
}

void print_violation(const Violation& v) {
  if (!v.tweet_id.empty()) std::cout << "[" << v.tweet_id << "] ";
  std::cout << v.rule << "\n";
}

int cmd_validate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open file: " << path << "\n";
    return 2;
  }
  ParseOutcome parsed = parse_corpus_collect(in);
  std::vector<Violation> all = std::move(parsed.violations);
  for (Violation& v : validate(parsed.corpus)) all.push_back(std::move(v));
  for (const Violation& v : all) print_violation(v);
  if (all.empty()) {
    std::cout << "OK: " << parsed.corpus.tweets.size() << " records, no violations\n";
    return 0;
  }
  std::cout << all.size() << " violation(s) in " << path << "\n";
  return 1;
}

void print_stat_row(const char* label, int64_t value) {
  std::printf("%-42s %10lld\n", label, static_cast<long long>(value));
}

void print_avg_row(const char* label, const GenderAverages& avg) {
  auto cell = [](const std::optional<double>& v) {
    char buf[32];
    if (v) std::snprintf(buf, sizeof(buf), "%.2f", *v);
    else std::snprintf(buf, sizeof(buf), "-");
    return std::string(buf);
  };
  std::printf("%-42s %10s %10s\n", label, cell(avg.male).c_str(), cell(avg.female).c_str());
}

json avg_json(const GenderAverages& avg) {
  json j;
  j["male"] = avg.male ? json(*avg.male) : json(nullptr);
  j["female"] = avg.female ? json(*avg.female) : json(nullptr);
  return j;
}

int cmd_stats(const std::string& path, const std::string& format) {
  Corpus c = parse_corpus_file(path);
  CorpusStats s = compute_stats(c);
  if (format == "json") {
    json j;
    j["command"] = "stats";
    j["input"] = path;
    j["total_tweets"] = s.total_tweets;
    j["total_words"] = s.total_words;
    j["words_hi"] = s.words_hi;
    j["words_en"] = s.words_en;
    j["words_other"] = s.words_other;
    j["male_tweets"] = s.male_tweets;
    j["female_tweets"] = s.female_tweets;
    j["avg_hashtags_per_tweet"] = avg_json(s.avg_hashtags);
    j["avg_punct_per_tweet"] = avg_json(s.avg_punct);
    j["avg_words_per_tweet"] = avg_json(s.avg_words);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::printf("Statistics of corpus %s\n\n", path.c_str());
  print_stat_row("Tweets included in corpus", s.total_tweets);
  print_stat_row("Total words", s.total_words);
  print_stat_row("Words in Hindi (transliterated)", s.words_hi);
  print_stat_row("Words in English", s.words_en);
  print_stat_row("Others (hashtags, punctuation, ...)", s.words_other);
  print_stat_row("Male tweets", s.male_tweets);
  print_stat_row("Female tweets", s.female_tweets);
  std::printf("\n%-42s %10s %10s\n", "Per-tweet averages", "male", "female");
  print_avg_row("Hashtags", s.avg_hashtags);
  print_avg_row("Punctuation marks", s.avg_punct);
  print_avg_row("Words", s.avg_words);
  return 0;
}

int cmd_ingest(const std::string& raw_path, const std::string& out_path, bool skip_bad) {
  std::ifstream in(raw_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open file: " << raw_path << "\n";
    return 2;
  }
  std::vector<RawTweet> raw;
  if (skip_bad) {
    std::vector<Violation> skipped;
    raw = ingest_raw_skip(in, skipped);
    for (const Violation& v : skipped)
      std::cerr << "warning: skipped record: " << v.rule << "\n";
  } else {
    raw = ingest_raw(in);
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write file: " << out_path << "\n";
    return 2;
  }
  size_t written = 0;
  for (const RawTweet& r : raw) {
    // Skeleton for manual annotation: whitespace tokenization with mention
    // and url placeholders, every token tagged O, gender/author left as
    // placeholders that `validate` will flag until a human fills them in.
    std::vector<std::string> tokens;
    for (std::string& tok : tokenize(r.text)) {
      if (is_mention(tok)) tokens.emplace_back(kMentionPlaceholder);
      else if (is_url(tok)) tokens.emplace_back(kUrlPlaceholder);
      else tokens.push_back(std::move(tok));
    }
    if (tokens.empty()) {
      std::cerr << "warning: record '" << r.id << "' has no tokens, skipped\n";
      continue;
    }
    out << "<tweet id=\"" << escape_annotation_text(r.id, true) << "\" author=\"\">\n";
    for (const std::string& tok : tokens)
      out << "<word lang=\"O\">" << escape_annotation_text(tok, false) << "</word>\n";
    out << "<gender>unknown</gender>\n</tweet>\n";
    ++written;
  }
  std::cout << "wrote " << written << " skeleton record(s) to " << out_path
            << " (fill in lang/gender/author, then run validate)\n";
  return 0;
}

int cmd_train(const std::string& corpus_path, const std::string& featureset_name,
              const std::string& model_name, const std::string& out_path, uint64_t seed,
              bool no_grid, const FeatureFlags& ff, const ModelFlags& mf,
              const std::string& spelling_path) {
  Corpus c = parse_corpus_file(corpus_path);
  Featureset set = featureset_from_string(featureset_name);
  ModelKind kind = model_kind_from_string(model_name);

  TrainOptions opt;
  opt.features = ff.config;
  opt.select_k = ff.select_k;
  opt.grid = !no_grid;
  opt.seed = seed;
  opt.spelling = spelling_from(spelling_path);

  TrainSummary summary;
  Pipeline p = train_pipeline(c, set, mf.spec(kind, seed), opt, &summary);
  save_pipeline_file(p, out_path);

  std::cout << "trained " << to_string(kind) << " on " << c.tweets.size() << " tweets\n";
  std::cout << "featureset " << to_string(set) << ": " << summary.fitted_dim
            << " fitted features, " << summary.selected_dim << " after selection\n";
  std::cout << "model: " << summary.chosen_spec << "\n";
  if (opt.grid)
    std::printf("grid-search accuracy (inner CV): %.4f\n", summary.grid_accuracy);
  std::cout << "saved to " << out_path << "\n";
  return 0;
}

int cmd_evaluate(const std::string& corpus_path, const std::string& featureset_name,
                 const std::string& model_name, int folds, uint64_t seed, bool grid,
                 bool partitioned, bool global_fit, int jobs, const FeatureFlags& ff,
                 const ModelFlags& mf, const std::string& spelling_path,
                 const std::string& format) {
  Corpus c = parse_corpus_file(corpus_path);
  Featureset set = featureset_from_string(featureset_name);
  ModelKind kind = model_kind_from_string(model_name);

  FoldAssignment fa = make_grouped_folds(c, folds, seed);
  EvalOptions opt;
  opt.features = ff.config;
  opt.select_k = ff.select_k;
  opt.grid = grid;
  opt.partitioned = partitioned;
  opt.global_fit = global_fit;
  opt.jobs = jobs;
  opt.seed = seed;
  opt.spelling = spelling_from(spelling_path);

  CVReport rep = cross_validate(c, set, mf.spec(kind, seed), fa, opt);

  if (format == "json") {
    json j;
    j["command"] = "evaluate";
    j["input"] = corpus_path;
    j["fingerprint"] = rep.fingerprint;
    j["folds"] = rep.k;
    j["fold_accuracy"] = rep.fold_accuracy;
    j["fold_test_size"] = rep.fold_test_size;
    j["mean_accuracy"] = rep.mean_accuracy;
    json cms = json::array();
    for (const FoldConfusion& cm : rep.confusion) {
      cms.push_back({{"male_as_male", cm.male_as_male},
                     {"male_as_female", cm.male_as_female},
                     {"female_as_male", cm.female_as_male},
                     {"female_as_female", cm.female_as_female}});
    }
    j["confusion"] = cms;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "grouped " << rep.k << "-fold cross-validation on " << c.tweets.size()
            << " tweets\n";
  std::cout << "config: " << rep.fingerprint << "\n";
  for (int fold = 0; fold < rep.k; ++fold) {
    std::printf("fold %2d: accuracy %.4f  (test size %d)\n", fold,
                rep.fold_accuracy[size_t(fold)], rep.fold_test_size[size_t(fold)]);
  }
  std::printf("mean accuracy: %.4f\n", rep.mean_accuracy);
  return 0;
}

int cmd_experiment(const std::string& corpus_path, int folds, uint64_t seed,
                   std::vector<std::string> classifiers, std::vector<std::string> featuresets,
                   bool grid, int jobs, const FeatureFlags& ff, const ModelFlags& mf,
                   const std::string& spelling_path, const std::string& format) {
  Corpus c = parse_corpus_file(corpus_path);
  FoldAssignment fa = make_grouped_folds(c, folds, seed);
  EvalOptions opt;
  opt.features = ff.config;
  opt.select_k = ff.select_k;
  opt.grid = grid;
  opt.jobs = jobs;
  opt.seed = seed;
  opt.spelling = spelling_from(spelling_path);

  std::vector<ModelKind> cols;
  if (classifiers.empty())
    cols = {ModelKind::NaiveBayes, ModelKind::SvmRbf, ModelKind::RandomForest};
  else
    for (const std::string& name : classifiers) cols.push_back(model_kind_from_string(name));
  std::vector<Featureset> rows;
  if (featuresets.empty())
    rows = {Featureset::CharNgrams, Featureset::BagOfWords, Featureset::RefTokens,
            Featureset::TopHashtags, Featureset::All};
  else
    for (const std::string& name : featuresets) rows.push_back(featureset_from_string(name));

  bool full_grid = cols.size() == 3 && rows.size() == 5;
  std::vector<std::vector<double>> cells(rows.size(), std::vector<double>(cols.size(), 0.0));
  std::string fingerprint;
  if (full_grid) {
    std::array<ModelSpec, 3> specs = {mf.spec(ModelKind::NaiveBayes, seed),
                                      mf.spec(ModelKind::SvmRbf, seed),
                                      mf.spec(ModelKind::RandomForest, seed)};
    ExperimentTable table = run_experiment_table(c, specs, fa, opt);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t k = 0; k < cols.size(); ++k) cells[r][k] = table.cells[r][k];
    fingerprint = table.fingerprint;
  } else {
    for (size_t r = 0; r < rows.size(); ++r) {
      for (size_t k = 0; k < cols.size(); ++k) {
        CVReport rep = cross_validate(c, rows[r], mf.spec(cols[k], seed), fa, opt);
        cells[r][k] = rep.mean_accuracy;
      }
    }
    std::ostringstream fp;
    fp << "folds=" << folds << " seed=" << seed << " select_k=" << opt.select_k;
    fingerprint = fp.str();
  }

  auto row_label = [](Featureset f) {
    switch (f) {
      case Featureset::CharNgrams: return "Character N grams";
      case Featureset::BagOfWords: return "Bag-of-words";
      case Featureset::RefTokens: return "Reference Tokens";
      case Featureset::TopHashtags: return "Top Hashtags";
      case Featureset::All: return "All features";
    }
    return "?";
  };
  auto col_label = [](ModelKind k) {
    switch (k) {
      case ModelKind::NaiveBayes: return "Naive Bayes";
      case ModelKind::SvmRbf: return "Kernel SVM";
      case ModelKind::RandomForest: return "Random Forest";
    }
    return "?";
  };

  if (format == "json") {
    json j;
    j["command"] = "experiment";
    j["input"] = corpus_path;
    j["fingerprint"] = fingerprint;
    json table = json::array();
    for (size_t r = 0; r < rows.size(); ++r) {
      json row;
      row["featureset"] = to_string(rows[r]);
      for (size_t k = 0; k < cols.size(); ++k) row[to_string(cols[k])] = cells[r][k];
      table.push_back(row);
    }
    j["cells"] = table;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  // one two-column table per classifier, mirroring the published layout
  for (size_t k = 0; k < cols.size(); ++k) {
    std::printf("\nAccuracy of each feature using %s (mean of %d folds, %%)\n", col_label(cols[k]),
                folds);
    std::printf("  %-22s %8s\n", "Features", "Accuracy");
    for (size_t r = 0; r < rows.size(); ++r)
      std::printf("  %-22s %8.1f\n", row_label(rows[r]), 100.0 * cells[r][k]);
  }
  std::printf("\nCombined grid (accuracy %%)\n  %-22s", "Features");
  for (size_t k = 0; k < cols.size(); ++k) std::printf(" %14s", col_label(cols[k]));
  std::printf("\n");
  for (size_t r = 0; r < rows.size(); ++r) {
    std::printf("  %-22s", row_label(rows[r]));
    for (size_t k = 0; k < cols.size(); ++k) std::printf(" %14.1f", 100.0 * cells[r][k]);
    std::printf("\n");
  }
  std::printf("\nconfig: %s\n", fingerprint.c_str());
  std::printf(
      "\nPublished baseline on the original 4015-tweet corpus (not redistributable,\n"
      "so these numbers are reference context, not a reproduction target):\n");
  std::printf("  %-22s %14s %14s %14s\n", "Features", "Naive Bayes", "Kernel SVM",
              "Random Forest");
  static const char* kRowNames[5] = {"Character N grams", "Bag-of-words", "Reference Tokens",
                                     "Top Hashtags", "All features"};
  for (size_t r = 0; r < 5; ++r) {
    std::printf("  %-22s %14.1f %14.1f %14.1f\n", kRowNames[r], kPublishedBaseline[r][0],
                kPublishedBaseline[r][1], kPublishedBaseline[r][2]);
  }
  return 0;
}

int cmd_generate(const GenConfig& cfg, const std::string& out_path,
                 const std::string& wordlist_hi, const std::string& wordlist_en) {
  GenConfig actual = cfg;
  if (!wordlist_hi.empty()) actual.hi_words = load_wordlist_file(wordlist_hi);
  if (!wordlist_en.empty()) actual.en_words = load_wordlist_file(wordlist_en);
  Corpus c = generate(actual);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write file: " << out_path << "\n";
    return 2;
  }
  serialize_corpus(c, out);
  std::cout << "wrote " << c.tweets.size() << " tweets (" << actual.n_authors << " authors, seed "
            << actual.seed << ") to " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gender prediction pipeline for English-Hindi code-mixed tweets"};
  app.require_subcommand(1);

  // validate
  std::string v_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse a corpus file and list violations");
  validate_cmd->add_option("path", v_path, "annotation file")->required();

  // stats
  std::string s_path, s_format = "table";
  CLI::App* stats_cmd = app.add_subcommand("stats", "corpus statistics table");
  stats_cmd->add_option("path", s_path, "annotation file")->required();
  stats_cmd->add_option("--format", s_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  // ingest
  std::string i_raw, i_out;
  bool i_skip = false;
  CLI::App* ingest_cmd =
      app.add_subcommand("ingest", "turn raw JSON-lines tweets into annotation skeletons");
  ingest_cmd->add_option("raw", i_raw, "JSON-lines input")->required();
  ingest_cmd->add_option("out", i_out, "skeleton output path")->required();
  ingest_cmd->add_flag("--skip-bad", i_skip, "warn and skip malformed records instead of failing");

  // train
  std::string t_path, t_featureset = "all", t_model = "svm", t_out = "model.cmix", t_spelling;
  uint64_t t_seed = kDefaultSeed;
  bool t_no_grid = false;
  FeatureFlags t_ff;
  ModelFlags t_mf;
  CLI::App* train_cmd = app.add_subcommand("train", "fit a pipeline on a full corpus");
  train_cmd->add_option("corpus", t_path, "annotation file")->required();
  train_cmd->add_option("--featureset", t_featureset,
                        "char-ngrams | bag-of-words | ref-tokens | top-hashtags | all");
  train_cmd->add_option("--model", t_model, "nb | svm | rf");
  train_cmd->add_option("--out", t_out, "pipeline output path");
  train_cmd->add_option("--seed", t_seed, "random seed");
  train_cmd->add_flag("--no-grid", t_no_grid, "skip hyperparameter grid search");
  train_cmd->add_option("--spelling", t_spelling, "spelling map file (variant<TAB>canonical)");
  t_ff.attach(train_cmd);
  t_mf.attach(train_cmd);

  // evaluate
  std::string e_path, e_featureset = "all", e_model = "svm", e_spelling, e_format = "table";
  int e_folds = 10, e_jobs = 1;
  uint64_t e_seed = kDefaultSeed;
  bool e_grid = false, e_partitioned = false, e_global = false;
  FeatureFlags e_ff;
  ModelFlags e_mf;
  CLI::App* eval_cmd = app.add_subcommand("evaluate", "author-grouped k-fold cross-validation");
  eval_cmd->add_option("corpus", e_path, "annotation file")->required();
  eval_cmd->add_option("--featureset", e_featureset,
                       "char-ngrams | bag-of-words | ref-tokens | top-hashtags | all");
  eval_cmd->add_option("--classifier", e_model, "nb | svm | rf");
  eval_cmd->add_option("--folds", e_folds, "fold count")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--seed", e_seed, "random seed");
  eval_cmd->add_flag("--grid", e_grid, "nested grid search inside each training partition");
  eval_cmd->add_flag("--partitioned", e_partitioned,
                     "fit per-language vocabularies and concatenate");
  eval_cmd->add_flag("--global-fit", e_global,
                     "fit vocabularies once on the whole corpus (leaks test data; for comparison)");
  eval_cmd->add_option("--jobs", e_jobs, "parallel fold workers")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--spelling", e_spelling, "spelling map file");
  eval_cmd->add_option("--format", e_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  e_ff.attach(eval_cmd);
  e_mf.attach(eval_cmd);

  // experiment
  std::string x_path, x_spelling, x_format = "table";
  int x_folds = 10, x_jobs = 1;
  uint64_t x_seed = kDefaultSeed;
  bool x_grid = false;
  std::vector<std::string> x_classifiers, x_featuresets;
  FeatureFlags x_ff;
  ModelFlags x_mf;
  CLI::App* exp_cmd =
      app.add_subcommand("experiment", "feature-family x classifier accuracy table");
  exp_cmd->add_option("corpus", x_path, "annotation file")->required();
  exp_cmd->add_option("--folds", x_folds, "fold count")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--seed", x_seed, "random seed");
  exp_cmd->add_option("--classifiers", x_classifiers, "subset of nb,svm,rf")->delimiter(',');
  exp_cmd->add_option("--featuresets", x_featuresets, "subset of the five feature families")
      ->delimiter(',');
  exp_cmd->add_flag("--grid", x_grid, "nested grid search per cell");
  exp_cmd->add_option("--jobs", x_jobs, "parallel fold workers")->check(CLI::PositiveNumber);
  exp_cmd->add_option("--spelling", x_spelling, "spelling map file");
  exp_cmd->add_option("--format", x_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  x_ff.attach(exp_cmd);
  x_mf.attach(exp_cmd);

  // generate
  GenConfig g_cfg;
  std::string g_out = "synthetic.ann", g_wl_hi, g_wl_en;
  CLI::App* gen_cmd = app.add_subcommand("generate", "deterministic synthetic corpus");
  gen_cmd->add_option("--out", g_out, "output annotation file");
  gen_cmd->add_option("--seed", g_cfg.seed, "random seed");
  gen_cmd->add_option("--authors", g_cfg.n_authors, "author count");
  gen_cmd->add_option("--male-authors", g_cfg.male_authors, "male author count (-1 = half)");
  gen_cmd->add_option("--tweets-per-author", g_cfg.tweets_per_author, "tweets per author");
  gen_cmd->add_option("--tokens-min", g_cfg.tokens_min, "min background tokens per tweet");
  gen_cmd->add_option("--tokens-max", g_cfg.tokens_max, "max background tokens per tweet");
  gen_cmd->add_option("--mix", g_cfg.hi_en_mix, "probability a background token is Hindi");
  gen_cmd->add_option("--signal", g_cfg.p_signal,
                      "marker emission probability for the matching gender");
  gen_cmd->add_option("--hashtag-rate-male", g_cfg.hashtag_rate_male, "hashtags per male tweet");
  gen_cmd->add_option("--hashtag-rate-female", g_cfg.hashtag_rate_female,
                      "hashtags per female tweet");
  gen_cmd->add_option("--punct-rate-male", g_cfg.punct_rate_male, "punct tokens per male tweet");
  gen_cmd->add_option("--punct-rate-female", g_cfg.punct_rate_female,
                      "punct tokens per female tweet");
  gen_cmd->add_option("--mention-rate", g_cfg.mention_rate, "mention probability per tweet");
  gen_cmd->add_option("--url-rate", g_cfg.url_rate, "url probability per tweet");
  gen_cmd->add_option("--wordlist-hi", g_wl_hi, "override the built-in Hindi wordlist");
  gen_cmd->add_option("--wordlist-en", g_wl_en, "override the built-in English wordlist");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(v_path);
    if (stats_cmd->parsed()) return cmd_stats(s_path, s_format);
    if (ingest_cmd->parsed()) return cmd_ingest(i_raw, i_out, i_skip);
    if (train_cmd->parsed())
      return cmd_train(t_path, t_featureset, t_model, t_out, t_seed, t_no_grid, t_ff, t_mf,
                       t_spelling);
    if (eval_cmd->parsed())
      return cmd_evaluate(e_path, e_featureset, e_model, e_folds, e_seed, e_grid, e_partitioned,
                          e_global, e_jobs, e_ff, e_mf, e_spelling, e_format);
    if (exp_cmd->parsed())
      return cmd_experiment(x_path, x_folds, x_seed, x_classifiers, x_featuresets, x_grid, x_jobs,
                            x_ff, x_mf, x_spelling, x_format);
    if (gen_cmd->parsed()) return cmd_generate(g_cfg, g_out, g_wl_hi, g_wl_en);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
