#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "cmix/features.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cmix;

namespace {

ProcessedTweet pt(std::vector<std::string> tokens, std::vector<LanguageTag> langs,
                  GenderLabel g = GenderLabel::Male, std::vector<std::string> hashtags = {}) {
  ProcessedTweet t;
  t.tokens = std::move(tokens);
  t.langs = std::move(langs);
  t.gender = g;
  t.hashtags = std::move(hashtags);
  t.author_id = "u";
  return t;
}

ProcessedTweet pt_en(std::vector<std::string> tokens, GenderLabel g = GenderLabel::Male) {
  std::vector<LanguageTag> langs(tokens.size(), LanguageTag::En);
  return pt(std::move(tokens), std::move(langs), g);
}

std::set<std::string> payloads(const std::vector<FeatureId>& ids) {
  std::set<std::string> out;
  for (const auto& id : ids) out.insert(id.payload);
  return out;
}

}  // namespace

TEST_CASE("char n-gram candidates of a token") {
  std::vector<ProcessedTweet> corpus = {pt_en({"abc"})};
  auto ids = fit_char_ngrams(corpus, {2, 2, 1, false});
  CHECK(payloads(ids) == std::set<std::string>{"ab", "bc"});
}

TEST_CASE("char n-gram frequency threshold boundary") {
  // "ab" appears exactly 9 times: below a min_freq of 10, at a min_freq of 9.
  std::vector<ProcessedTweet> corpus;
  for (int i = 0; i < 9; ++i) corpus.push_back(pt_en({"ab"}));
  CHECK(fit_char_ngrams(corpus, {2, 2, 10, false}).empty());
  auto ids = fit_char_ngrams(corpus, {2, 2, 9, false});
  REQUIRE(ids.size() == 1);
  CHECK(ids[0].payload == "ab");
  CHECK(ids[0].order == 2);
}

TEST_CASE("char n-grams match the brute-force counter") {
  Rng rng(31);
  std::vector<ProcessedTweet> corpus;
  for (int i = 0; i < 40; ++i) {
    std::vector<std::string> toks;
    for (int k = 0; k < int(rng.between(1, 6)); ++k) {
      static const char* words[] = {"ab", "abc", "abcd", "bcd", "cab", "dab", "abab"};
      toks.push_back(words[rng.below(7)]);
    }
    corpus.push_back(pt_en(toks));
  }
  auto counts = oracle::char_gram_counts(corpus, 2, 3);
  for (int min_freq : {1, 3, 10}) {
    auto ids = fit_char_ngrams(corpus, {2, 3, min_freq, false});
    std::set<std::string> expected;
    for (const auto& [gram, c] : counts)
      if (c >= min_freq) expected.insert(gram);
    CHECK(payloads(ids) == expected);
  }
}

TEST_CASE("word n-grams stay within a tweet") {
  std::vector<ProcessedTweet> corpus = {pt_en({"a", "b", "c"})};
  auto ids = fit_word_ngrams(corpus, {1, 2, 1});
  CHECK(payloads(ids) == std::set<std::string>{"a", "b", "c", "a b", "b c"});

  std::vector<ProcessedTweet> single = {pt_en({"solo"})};
  auto only = fit_word_ngrams(single, {1, 3, 1});
  REQUIRE(only.size() == 1);
  CHECK(only[0].payload == "solo");
  CHECK(only[0].order == 1);
}

TEST_CASE("word n-grams match the brute-force counter") {
  Rng rng(57);
  std::vector<ProcessedTweet> corpus;
  for (int i = 0; i < 30; ++i) {
    std::vector<std::string> toks;
    static const char* words[] = {"jab", "koi", "baat", "ho", "to"};
    for (int k = 0; k < int(rng.between(1, 7)); ++k) toks.push_back(words[rng.below(5)]);
    corpus.push_back(pt_en(toks));
  }
  auto counts = oracle::word_gram_counts(corpus, 1, 3);
  for (int min_freq : {1, 2, 5}) {
    auto ids = fit_word_ngrams(corpus, {1, 3, min_freq});
    std::set<std::string> expected;
    for (const auto& [gram, c] : counts)
      if (c >= min_freq) expected.insert(gram);
    CHECK(payloads(ids) == expected);
  }
}

TEST_CASE("reference token scoring and thresholds") {
  // token "x": 4 male + 2 female occurrences -> score 2/3, kept
  // token "once": single occurrence -> dropped by the frequency floor
  // token "even": 3 male + 3 female -> score 0.5, dropped
  std::vector<ProcessedTweet> corpus = {
      pt({"x", "x", "even"}, {LanguageTag::Hi, LanguageTag::Hi, LanguageTag::Hi}, GenderLabel::Male),
      pt({"x", "x", "even", "even"}, {LanguageTag::Hi, LanguageTag::Hi, LanguageTag::Hi, LanguageTag::Hi},
         GenderLabel::Male),
      pt({"x", "once", "even"}, {LanguageTag::Hi, LanguageTag::Hi, LanguageTag::Hi}, GenderLabel::Female),
      pt({"x", "even", "even"}, {LanguageTag::Hi, LanguageTag::Hi, LanguageTag::Hi}, GenderLabel::Female),
  };
  RefTokenTable table = fit_reference_tokens(corpus, {0.6, 2});
  REQUIRE(table.hi.count("x") == 1);
  CHECK(table.hi.at("x").freq_male == 4);
  CHECK(table.hi.at("x").freq_female == 2);
  CHECK(table.hi.at("x").score() == doctest::Approx(4.0 / 6.0));
  CHECK(table.hi.count("once") == 0);
  CHECK(table.hi.count("even") == 0);
  CHECK(table.en.empty());
}

TEST_CASE("reference tokens split by language dictionary, O excluded") {
  std::vector<ProcessedTweet> corpus = {
      pt({"tok", "tok"}, {LanguageTag::Hi, LanguageTag::En}, GenderLabel::Male),
      pt({"tok", "other"}, {LanguageTag::Hi, LanguageTag::O}, GenderLabel::Male),
  };
  // needs both classes for scores to mean anything; add a female tweet
  corpus.push_back(pt({"tok"}, {LanguageTag::Hi}, GenderLabel::Female));
  RefTokenTable table = fit_reference_tokens(corpus, {0.6, 2});
  REQUIRE(table.hi.count("tok") == 1);
  CHECK(table.hi.at("tok").freq_male == 2);
  CHECK(table.hi.at("tok").freq_female == 1);
  CHECK(table.en.count("tok") == 0);  // one En occurrence, below the floor
  CHECK(table.hi.count("other") == 0);
}

TEST_CASE("property: reference table inclusion is exactly the stated filter") {
  Rng rng(88);
  for (int iter = 0; iter < 100; ++iter) {
    // random frequency profile for one token
    int fm = int(rng.between(0, 8)), ff = int(rng.between(0, 8));
    if (fm + ff == 0) continue;
    std::vector<ProcessedTweet> corpus;
    for (int i = 0; i < fm; ++i) corpus.push_back(pt({"z"}, {LanguageTag::Hi}, GenderLabel::Male));
    for (int i = 0; i < ff; ++i) corpus.push_back(pt({"z"}, {LanguageTag::Hi}, GenderLabel::Female));
    RefTokenTable table = fit_reference_tokens(corpus, {0.6, 2});
    double score = double(std::max(fm, ff)) / double(fm + ff);
    bool expect = fm + ff >= 2 && score >= 0.6;
    CHECK(table.hi.count("z") == (expect ? 1u : 0u));
    if (expect) CHECK(table.hi.at("z").score() >= 0.5);
  }
}

TEST_CASE("top hashtags by frequency with lexicographic ties") {
  std::vector<ProcessedTweet> corpus;
  auto with_tags = [&](std::vector<std::string> tags) {
    corpus.push_back(pt({"w"}, {LanguageTag::En}, GenderLabel::Male, std::move(tags)));
  };
  for (int i = 0; i < 5; ++i) with_tags({"alpha"});
  for (int i = 0; i < 3; ++i) with_tags({"beta"});
  with_tags({"gamma"});
  auto top2 = fit_top_hashtags(corpus, 2);
  CHECK(payloads(top2) == std::set<std::string>{"alpha", "beta"});

  std::vector<ProcessedTweet> tie;
  for (int i = 0; i < 3; ++i)
    tie.push_back(pt({"w"}, {LanguageTag::En}, GenderLabel::Male, {"bbb"}));
  for (int i = 0; i < 3; ++i)
    tie.push_back(pt({"w"}, {LanguageTag::En}, GenderLabel::Male, {"aaa"}));
  auto top1 = fit_top_hashtags(tie, 1);
  REQUIRE(top1.size() == 1);
  CHECK(top1[0].payload == "aaa");

  CHECK(fit_top_hashtags(corpus, 50).size() == 3);  // fewer than k keeps all
}

TEST_CASE("vectorize counts, hashtag presence, out-of-vocabulary silence") {
  FeatureConfig cfg;
  cfg.char_ngrams.min_freq = 1;
  cfg.word_ngrams.min_freq = 1;
  std::vector<ProcessedTweet> corpus = {
      pt({"likhungi", "likhungi"}, {LanguageTag::Hi, LanguageTag::Hi}, GenderLabel::Female,
         {"TopTag", "TopTag"}),
      pt({"likhungi"}, {LanguageTag::Hi}, GenderLabel::Female),
      pt({"other"}, {LanguageTag::Hi}, GenderLabel::Male),
      pt({"other"}, {LanguageTag::Hi}, GenderLabel::Male),
  };
  Vocabulary v = build_vocabulary(corpus, cfg, Featureset::All);
  int ref_col = v.index_of({FeatureKind::RefToken, 0, "Hi:likhungi"});
  REQUIRE(ref_col >= 0);
  int tag_col = v.index_of({FeatureKind::Hashtag, 0, "TopTag"});
  REQUIRE(tag_col >= 0);

  ProcessedTweet probe = pt({"likhungi", "likhungi", "unseen"},
                            {LanguageTag::Hi, LanguageTag::Hi, LanguageTag::Hi},
                            GenderLabel::Female, {"TopTag", "TopTag", "NeverSeen"});
  SparseVector x = vectorize(probe, v);
  auto value_at = [&](int col) {
    for (auto& [j, val] : x.entries)
      if (j == col) return val;
    return 0.0;
  };
  CHECK(value_at(ref_col) == 2.0);
  CHECK(value_at(tag_col) == 1.0);  // presence, not the count of 2

  SparseVector again = vectorize(probe, v);
  CHECK(again == x);

  SparseVector zero = vectorize(pt({}, {}, GenderLabel::Male), v);
  CHECK(zero.entries.empty());
  CHECK(zero.dim == v.dim());
}

TEST_CASE("chi-square of a perfectly separating column on a balanced corpus") {
  FeatureMatrix m;
  m.dim = 1;
  for (int i = 0; i < 20; ++i) {
    SparseVector x;
    x.dim = 1;
    bool male = i < 10;
    if (male) x.entries = {{0, 1.0}};
    m.rows.push_back(x);
    m.labels.push_back(male ? GenderLabel::Male : GenderLabel::Female);
    m.authors.push_back("u" + std::to_string(i));
  }
  SelectionMask mask = chi_square_select(m, 1);
  REQUIRE(mask.kept == std::vector<int>{0});
  CHECK(mask.scores[0] == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("constant column has a zero marginal and is never kept") {
  FeatureMatrix m;
  m.dim = 2;
  for (int i = 0; i < 6; ++i) {
    SparseVector x;
    x.dim = 2;
    x.entries = {{0, 1.0}};  // column 0 present everywhere
    if (i % 2 == 0) x.entries.emplace_back(1, 1.0);
    m.rows.push_back(x);
    m.labels.push_back(i < 3 ? GenderLabel::Male : GenderLabel::Female);
    m.authors.push_back("u");
  }
  SelectionMask mask = chi_square_select(m, 10);
  CHECK(mask.scores[0] == 0.0);
  CHECK(mask.kept == std::vector<int>{1});
}

namespace {

FeatureMatrix random_matrix(Rng& rng, int max_rows, int max_dim) {
  FeatureMatrix m;
  m.dim = int(rng.between(1, max_dim));
  int rows = int(rng.between(2, max_rows));
  for (int r = 0; r < rows; ++r) {
    SparseVector x;
    x.dim = m.dim;
    for (int j = 0; j < m.dim; ++j) {
      if (rng.bernoulli(0.3)) x.entries.emplace_back(j, double(rng.between(1, 3)));
    }
    m.rows.push_back(std::move(x));
    // guarantee both classes
    GenderLabel g = r == 0 ? GenderLabel::Male
                           : (r == 1 ? GenderLabel::Female
                                     : (rng.bernoulli(0.5) ? GenderLabel::Male : GenderLabel::Female));
    m.labels.push_back(g);
    m.authors.push_back("u" + std::to_string(r));
  }
  return m;
}

}  // namespace

TEST_CASE("chi-square matches the brute-force oracle") {
  Rng rng(2024);
  for (int iter = 0; iter < 50; ++iter) {
    FeatureMatrix m = random_matrix(rng, 50, 100);
    int k = int(rng.between(1, m.dim));
    SelectionMask mask = chi_square_select(m, k);
    oracle::Chi2Result expect = oracle::chi2_select(m, k);
    REQUIRE(mask.kept == expect.kept);
    REQUIRE(mask.scores.size() == expect.scores.size());
    for (size_t j = 0; j < expect.scores.size(); ++j)
      CHECK(mask.scores[j] == doctest::Approx(expect.scores[j]).epsilon(1e-9));
  }
}

TEST_CASE("property: chi-square is symmetric under label swap") {
  Rng rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    FeatureMatrix m = random_matrix(rng, 30, 40);
    FeatureMatrix swapped = m;
    for (GenderLabel& g : swapped.labels)
      g = g == GenderLabel::Male ? GenderLabel::Female : GenderLabel::Male;
    SelectionMask a = chi_square_select(m, m.dim);
    SelectionMask b = chi_square_select(swapped, m.dim);
    CHECK(a.scores == b.scores);
    CHECK(a.kept == b.kept);
  }
}

TEST_CASE("chi-square with k >= dim keeps exactly the supported columns") {
  Rng rng(13);
  FeatureMatrix m = random_matrix(rng, 30, 40);
  SelectionMask all = chi_square_select(m, m.dim + 100);
  std::vector<int> supported;
  auto dense = oracle::densify(m);
  for (int j = 0; j < m.dim; ++j) {
    size_t present = 0;
    for (const auto& row : dense)
      if (row[size_t(j)] != 0) ++present;
    if (present > 0 && present < dense.size()) supported.push_back(j);
  }
  CHECK(all.kept == supported);
}

TEST_CASE("chi-square preconditions") {
  FeatureMatrix m;
  m.dim = 1;
  CHECK_THROWS_AS(chi_square_select(m, 5), DomainError);  // empty
  SparseVector x;
  x.dim = 1;
  m.rows.push_back(x);
  m.labels.push_back(GenderLabel::Male);
  m.authors.push_back("u");
  CHECK_THROWS_AS(chi_square_select(m, 0), DomainError);  // bad k
  CHECK_THROWS_AS(chi_square_select(m, 5), DomainError);  // single class
}

TEST_CASE("apply_mask projects vectors") {
  SparseVector x;
  x.dim = 5;
  x.entries = {{0, 1.0}, {2, 3.0}, {4, 5.0}};
  SelectionMask identity;
  identity.original_dim = 5;
  identity.kept = {0, 1, 2, 3, 4};
  CHECK(apply_mask(x, identity) == x);

  SelectionMask pick;
  pick.original_dim = 5;
  pick.kept = {2, 3};
  SparseVector y = apply_mask(x, pick);
  CHECK(y.dim == 2);
  CHECK(y.entries == std::vector<std::pair<int, double>>{{0, 3.0}});

  SparseVector zero;
  zero.dim = 5;
  SparseVector z = apply_mask(zero, pick);
  CHECK(z.dim == 2);
  CHECK(z.entries.empty());
}

TEST_CASE("property: apply_mask agrees with index-by-index projection") {
  Rng rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    FeatureMatrix m = random_matrix(rng, 10, 30);
    SelectionMask mask;
    mask.original_dim = m.dim;
    for (int j = 0; j < m.dim; ++j)
      if (rng.bernoulli(0.4)) mask.kept.push_back(j);
    auto dense = oracle::densify(m);
    for (size_t r = 0; r < m.rows.size(); ++r) {
      SparseVector got = apply_mask(m.rows[r], mask);
      REQUIRE(got.dim == int(mask.kept.size()));
      std::vector<double> dense_got(mask.kept.size(), 0.0);
      for (const auto& [j, v] : got.entries) dense_got[size_t(j)] = v;
      for (size_t p = 0; p < mask.kept.size(); ++p)
        CHECK(dense_got[p] == dense[r][size_t(mask.kept[p])]);
    }
  }
}

TEST_CASE("property: raising min_freq never adds vocabulary entries") {
  Rng rng(19);
  std::vector<ProcessedTweet> corpus;
  for (int i = 0; i < 30; ++i) {
    std::vector<std::string> toks;
    static const char* words[] = {"aa", "ab", "ba", "bb", "abc"};
    for (int k = 0; k < int(rng.between(1, 6)); ++k) toks.push_back(words[rng.below(5)]);
    corpus.push_back(pt_en(toks));
  }
  std::set<std::string> prev;
  bool first = true;
  for (int freq = 1; freq <= 12; ++freq) {
    auto ids = fit_char_ngrams(corpus, {2, 3, freq, false});
    auto cur = payloads(ids);
    if (!first) {
      for (const auto& p : cur) CHECK(prev.count(p) == 1);
    }
    prev = cur;
    first = false;
  }
}

TEST_CASE("partitioned vocabularies split by language") {
  FeatureConfig cfg;
  cfg.char_ngrams.min_freq = 1;
  cfg.word_ngrams.min_freq = 1;
  cfg.ref_tokens.min_freq = 2;
  std::vector<ProcessedTweet> corpus = {
      pt({"hindi", "word", "hindi"}, {LanguageTag::Hi, LanguageTag::En, LanguageTag::Hi},
         GenderLabel::Male),
      pt({"hindi", "word"}, {LanguageTag::Hi, LanguageTag::En}, GenderLabel::Female),
  };
  PartitionedVocabulary pv = fit_partitioned(corpus, cfg, Featureset::BagOfWords);
  CHECK(pv.dim() == pv.hi.dim() + pv.en.dim());
  // per-language unigram counts, checked directly
  CHECK(pv.hi.index_of({FeatureKind::WordNgram, 1, "hindi"}) >= 0);
  CHECK(pv.hi.index_of({FeatureKind::WordNgram, 1, "word"}) == -1);
  CHECK(pv.en.index_of({FeatureKind::WordNgram, 1, "word"}) >= 0);
  CHECK(pv.en.index_of({FeatureKind::WordNgram, 1, "hindi"}) == -1);

  ProcessedTweet hi_only = pt({"hindi"}, {LanguageTag::Hi}, GenderLabel::Male);
  SparseVector x = vectorize_partitioned(hi_only, pv);
  CHECK(x.dim == pv.dim());
  for (const auto& [j, v] : x.entries) CHECK(j < pv.hi.dim());  // En half stays zero

  ProcessedTweet both = pt({"hindi", "hindi", "word"},
                           {LanguageTag::Hi, LanguageTag::Hi, LanguageTag::En}, GenderLabel::Male);
  SparseVector y = vectorize_partitioned(both, pv);
  double hi_count = 0, en_count = 0;
  for (const auto& [j, v] : y.entries) {
    if (j == pv.hi.index_of({FeatureKind::WordNgram, 1, "hindi"})) hi_count = v;
    if (j == pv.hi.dim() + pv.en.index_of({FeatureKind::WordNgram, 1, "word"})) en_count = v;
  }
  CHECK(hi_count == 2.0);
  CHECK(en_count == 1.0);
}

TEST_CASE("vocabulary and mask serialization round-trips") {
  FeatureConfig cfg;
  cfg.char_ngrams.min_freq = 1;
  cfg.word_ngrams.min_freq = 1;
  std::vector<ProcessedTweet> corpus = {
      pt({"ek", "do", "teen"}, {LanguageTag::Hi, LanguageTag::Hi, LanguageTag::Hi},
         GenderLabel::Male, {"Tag_One"}),
      pt({"ek", "do"}, {LanguageTag::Hi, LanguageTag::Hi}, GenderLabel::Female),
  };
  Vocabulary v = build_vocabulary(corpus, cfg, Featureset::All);
  REQUIRE(v.dim() > 0);
  std::stringstream buf;
  save_vocabulary(v, buf);
  Vocabulary v2 = load_vocabulary(buf);
  CHECK(v2 == v);
  CHECK(v2.config().char_ngrams.n_max == cfg.char_ngrams.n_max);
  // identical vectorization after reload
  SparseVector a = vectorize(corpus[0], v);
  SparseVector b = vectorize(corpus[0], v2);
  CHECK(a == b);

  FeatureMatrix m = vectorize_all(corpus, v);
  SelectionMask mask = chi_square_select(m, 3);
  std::stringstream mbuf;
  save_mask(mask, mbuf);
  SelectionMask mask2 = load_mask(mbuf);
  CHECK(mask2 == mask);
}

TEST_CASE("vectorize depends only on tweet content, not corpus order") {
  FeatureConfig cfg;
  cfg.char_ngrams.min_freq = 1;
  cfg.word_ngrams.min_freq = 1;
  std::vector<ProcessedTweet> corpus = {
      pt_en({"one", "two"}, GenderLabel::Male),
      pt_en({"three"}, GenderLabel::Female),
      pt_en({"two", "one"}, GenderLabel::Male),
  };
  std::vector<ProcessedTweet> shuffled = {corpus[2], corpus[0], corpus[1]};
  Vocabulary v1 = build_vocabulary(corpus, cfg, Featureset::All);
  Vocabulary v2 = build_vocabulary(shuffled, cfg, Featureset::All);
  CHECK(v1 == v2);  // canonical ordering makes the fit order-free
  for (const auto& t : corpus) CHECK(vectorize(t, v1) == vectorize(t, v2));
}
