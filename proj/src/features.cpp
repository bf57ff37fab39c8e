#include "cmix/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "cmix/textutil.hpp"

namespace cmix {

const char* to_string(FeatureKind k) {
  switch (k) {
    case FeatureKind::CharNgram: return "char";
    case FeatureKind::WordNgram: return "word";
    case FeatureKind::RefToken: return "ref";
    case FeatureKind::Hashtag: return "tag";
  }
  return "?";
}

const char* to_string(Featureset f) {
  switch (f) {
    case Featureset::CharNgrams: return "char-ngrams";
    case Featureset::BagOfWords: return "bag-of-words";
    case Featureset::RefTokens: return "ref-tokens";
    case Featureset::TopHashtags: return "top-hashtags";
    case Featureset::All: return "all";
  }
  return "?";
}

Featureset featureset_from_string(const std::string& name) {
  if (name == "char-ngrams") return Featureset::CharNgrams;
  if (name == "bag-of-words") return Featureset::BagOfWords;
  if (name == "ref-tokens") return Featureset::RefTokens;
  if (name == "top-hashtags") return Featureset::TopHashtags;
  if (name == "all") return Featureset::All;
  throw DomainError("unknown featureset '" + name +
                    "' (expected char-ngrams, bag-of-words, ref-tokens, top-hashtags or all)");
}

namespace {

bool uses_char(Featureset s) { return s == Featureset::CharNgrams || s == Featureset::All; }
bool uses_word(Featureset s) { return s == Featureset::BagOfWords || s == Featureset::All; }
bool uses_ref(Featureset s) { return s == Featureset::RefTokens || s == Featureset::All; }
bool uses_hashtag(Featureset s) { return s == Featureset::TopHashtags || s == Featureset::All; }

std::string pad_token(const std::string& tok, bool pad) {
  if (!pad) return tok;
  return "^" + tok + "$";
}

template <typename Fn>
void for_each_char_ngram(const std::string& token, const CharNgramConfig& cfg, Fn&& fn) {
  std::string t = pad_token(token, cfg.pad);
  auto bounds = utf8_boundaries(t);
  int len = int(bounds.size()) - 1;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int i = 0; i + n <= len; ++i) {
      fn(n, t.substr(bounds[i], bounds[i + n] - bounds[i]));
    }
  }
}

template <typename Fn>
void for_each_word_ngram(const std::vector<std::string>& tokens, const WordNgramConfig& cfg,
                         Fn&& fn) {
  int len = int(tokens.size());
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int i = 0; i + n <= len; ++i) {
      std::string joined = tokens[i];
      for (int k = 1; k < n; ++k) {
        joined += ' ';
        joined += tokens[i + k];
      }
      fn(n, std::move(joined));
    }
  }
}

std::string ref_payload(LanguageTag lang, const std::string& token) {
  return (lang == LanguageTag::Hi ? "Hi:" : "En:") + token;
}

}  // namespace

std::vector<FeatureId> fit_char_ngrams(std::span<const ProcessedTweet> corpus,
                                       const CharNgramConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw DomainError("invalid char n-gram range");
  if (cfg.min_freq < 1) throw DomainError("char n-gram min_freq must be >= 1");
  std::map<std::pair<int, std::string>, int64_t> freq;
  for (const ProcessedTweet& t : corpus) {
    for (const std::string& tok : t.tokens) {
      for_each_char_ngram(tok, cfg, [&](int n, std::string gram) {
        ++freq[{n, std::move(gram)}];
      });
    }
  }
  std::vector<FeatureId> out;
  for (const auto& [key, count] : freq) {
    if (count >= cfg.min_freq)
      out.push_back({FeatureKind::CharNgram, key.first, key.second});
  }
  return out;
}

std::vector<FeatureId> fit_word_ngrams(std::span<const ProcessedTweet> corpus,
                                       const WordNgramConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw DomainError("invalid word n-gram range");
  if (cfg.min_freq < 1) throw DomainError("word n-gram min_freq must be >= 1");
  std::map<std::pair<int, std::string>, int64_t> freq;
  for (const ProcessedTweet& t : corpus) {
    for_each_word_ngram(t.tokens, cfg, [&](int n, std::string gram) {
      ++freq[{n, std::move(gram)}];
    });
  }
  std::vector<FeatureId> out;
  for (const auto& [key, count] : freq) {
    if (count >= cfg.min_freq)
      out.push_back({FeatureKind::WordNgram, key.first, key.second});
  }
  return out;
}

RefTokenTable fit_reference_tokens(std::span<const ProcessedTweet> corpus,
                                   const RefTokenConfig& cfg) {
  std::map<std::string, RefTokenStats> counts[2];  // 0 = Hi, 1 = En
  for (const ProcessedTweet& t : corpus) {
    for (size_t i = 0; i < t.tokens.size(); ++i) {
      LanguageTag lang = t.langs[i];
      if (lang == LanguageTag::O) continue;
      RefTokenStats& st = counts[lang == LanguageTag::Hi ? 0 : 1][t.tokens[i]];
      if (t.gender == GenderLabel::Male) ++st.freq_male;
      else ++st.freq_female;
    }
  }
  RefTokenTable table;
  for (int d = 0; d < 2; ++d) {
    auto& dst = d == 0 ? table.hi : table.en;
    for (const auto& [token, st] : counts[d]) {
      if (st.total() >= cfg.min_freq && st.score() >= cfg.min_share) dst[token] = st;
    }
  }
  return table;
}

std::vector<FeatureId> fit_top_hashtags(std::span<const ProcessedTweet> corpus, int k) {
  if (k < 1) throw DomainError("hashtag top-k must be >= 1");
  std::map<std::string, int64_t> freq;
  for (const ProcessedTweet& t : corpus) {
    for (const std::string& tag : t.hashtags) ++freq[tag];
  }
  std::vector<std::pair<std::string, int64_t>> ranked(freq.begin(), freq.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (int(ranked.size()) > k) ranked.resize(size_t(k));
  std::vector<FeatureId> out;
  out.reserve(ranked.size());
  for (auto& [tag, count] : ranked) out.push_back({FeatureKind::Hashtag, 0, tag});
  return out;
}

Vocabulary Vocabulary::freeze(std::vector<FeatureId> ids, const FeatureConfig& cfg, Featureset set) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Vocabulary v;
  v.ids_ = std::move(ids);
  for (int i = 0; i < int(v.ids_.size()); ++i) v.index_[v.ids_[size_t(i)]] = i;
  v.set_ = set;
  v.config_ = std::make_shared<const FeatureConfig>(cfg);
  return v;
}

int Vocabulary::index_of(const FeatureId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

const FeatureConfig& Vocabulary::config() const {
  static const FeatureConfig defaults{};
  return config_ ? *config_ : defaults;
}

bool Vocabulary::operator==(const Vocabulary& other) const {
  return ids_ == other.ids_ && set_ == other.set_;
}

Vocabulary build_vocabulary(std::span<const ProcessedTweet> corpus, const FeatureConfig& cfg,
                            Featureset set) {
  std::vector<FeatureId> ids;
  if (uses_char(set)) {
    auto part = fit_char_ngrams(corpus, cfg.char_ngrams);
    ids.insert(ids.end(), part.begin(), part.end());
  }
  if (uses_word(set)) {
    auto part = fit_word_ngrams(corpus, cfg.word_ngrams);
    ids.insert(ids.end(), part.begin(), part.end());
  }
  if (uses_ref(set)) {
    RefTokenTable table = fit_reference_tokens(corpus, cfg.ref_tokens);
    for (const auto& [token, st] : table.hi)
      ids.push_back({FeatureKind::RefToken, 0, "Hi:" + token});
    for (const auto& [token, st] : table.en)
      ids.push_back({FeatureKind::RefToken, 0, "En:" + token});
  }
  if (uses_hashtag(set)) {
    auto part = fit_top_hashtags(corpus, cfg.hashtag_top_k);
    ids.insert(ids.end(), part.begin(), part.end());
  }
  return Vocabulary::freeze(std::move(ids), cfg, set);
}

double SparseVector::squared_norm() const {
  double s = 0;
  for (const auto& [i, v] : entries) s += v * v;
  return s;
}

double dot(const SparseVector& a, const SparseVector& b) {
  double s = 0;
  size_t i = 0, j = 0;
  while (i < a.entries.size() && j < b.entries.size()) {
    int ai = a.entries[i].first, bj = b.entries[j].first;
    if (ai == bj) {
      s += a.entries[i].second * b.entries[j].second;
      ++i;
      ++j;
    } else if (ai < bj) {
      ++i;
    } else {
      ++j;
    }
  }
  return s;
}

double squared_distance(const SparseVector& a, const SparseVector& b) {
  double s = 0;
  size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j >= b.entries.size() || (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
      s += a.entries[i].second * a.entries[i].second;
      ++i;
    } else if (i >= a.entries.size() || b.entries[j].first < a.entries[i].first) {
      s += b.entries[j].second * b.entries[j].second;
      ++j;
    } else {
      double d = a.entries[i].second - b.entries[j].second;
      s += d * d;
      ++i;
      ++j;
    }
  }
  return s;
}

SparseVector vectorize(const ProcessedTweet& t, const Vocabulary& v) {
  const FeatureConfig& cfg = v.config();
  Featureset set = v.featureset();
  std::map<int, double> acc;
  FeatureId probe;

  if (uses_char(set)) {
    probe.kind = FeatureKind::CharNgram;
    for (const std::string& tok : t.tokens) {
      for_each_char_ngram(tok, cfg.char_ngrams, [&](int n, std::string gram) {
        probe.order = n;
        probe.payload = std::move(gram);
        int idx = v.index_of(probe);
        if (idx >= 0) acc[idx] += 1.0;
      });
    }
  }
  if (uses_word(set)) {
    probe.kind = FeatureKind::WordNgram;
    for_each_word_ngram(t.tokens, cfg.word_ngrams, [&](int n, std::string gram) {
      probe.order = n;
      probe.payload = std::move(gram);
      int idx = v.index_of(probe);
      if (idx >= 0) acc[idx] += 1.0;
    });
  }
  if (uses_ref(set)) {
    probe.kind = FeatureKind::RefToken;
    probe.order = 0;
    for (size_t i = 0; i < t.tokens.size(); ++i) {
      if (t.langs[i] == LanguageTag::O) continue;
      probe.payload = ref_payload(t.langs[i], t.tokens[i]);
      int idx = v.index_of(probe);
      if (idx >= 0) acc[idx] += 1.0;
    }
  }
  if (uses_hashtag(set)) {
    probe.kind = FeatureKind::Hashtag;
    probe.order = 0;
    for (const std::string& tag : t.hashtags) {
      probe.payload = tag;
      int idx = v.index_of(probe);
      if (idx >= 0) acc[idx] = 1.0;  // presence, not count
    }
  }

  SparseVector x;
  x.dim = v.dim();
  x.entries.assign(acc.begin(), acc.end());
  return x;
}

FeatureMatrix vectorize_all(std::span<const ProcessedTweet> corpus, const Vocabulary& v) {
  FeatureMatrix m;
  m.dim = v.dim();
  m.rows.reserve(corpus.size());
  for (const ProcessedTweet& t : corpus) {
    m.rows.push_back(vectorize(t, v));
    m.labels.push_back(t.gender);
    m.authors.push_back(t.author_id);
  }
  return m;
}

SelectionMask chi_square_select(const FeatureMatrix& m, int k) {
  if (k <= 0) throw DomainError("chi-square selection requires k > 0");
  if (m.rows.empty()) throw DomainError("chi-square selection requires a non-empty matrix");
  int64_t n_male = 0, n_female = 0;
  for (GenderLabel g : m.labels) (g == GenderLabel::Male ? n_male : n_female)++;
  if (n_male == 0 || n_female == 0)
    throw DomainError("chi-square selection requires both classes present");

  std::vector<int64_t> present_male(size_t(m.dim), 0), present_female(size_t(m.dim), 0);
  for (size_t r = 0; r < m.rows.size(); ++r) {
    auto& counter = m.labels[r] == GenderLabel::Male ? present_male : present_female;
    for (const auto& [j, v] : m.rows[r].entries) ++counter[size_t(j)];
  }

  SelectionMask mask;
  mask.original_dim = m.dim;
  mask.scores.assign(size_t(m.dim), 0.0);
  std::vector<int> supported;
  double n = double(n_male + n_female);
  for (int j = 0; j < m.dim; ++j) {
    double a = double(present_male[size_t(j)]);
    double b = double(present_female[size_t(j)]);
    double c = double(n_male) - a;
    double d = double(n_female) - b;
    double row1 = a + b, row0 = c + d, col_m = a + c, col_f = b + d;
    if (row1 == 0 || row0 == 0 || col_m == 0 || col_f == 0) continue;  // zero marginal
    double diff = a * d - b * c;
    mask.scores[size_t(j)] = n * diff * diff / (row1 * row0 * col_m * col_f);
    supported.push_back(j);
  }
  std::sort(supported.begin(), supported.end(), [&](int x, int y) {
    if (mask.scores[size_t(x)] != mask.scores[size_t(y)]) return mask.scores[size_t(x)] > mask.scores[size_t(y)];
    return x < y;
  });
  if (int(supported.size()) > k) supported.resize(size_t(k));
  std::sort(supported.begin(), supported.end());
  mask.kept = std::move(supported);
  return mask;
}

SparseVector apply_mask(const SparseVector& x, const SelectionMask& mask) {
  SparseVector out;
  out.dim = int(mask.kept.size());
  size_t i = 0, j = 0;
  while (i < x.entries.size() && j < mask.kept.size()) {
    int xi = x.entries[i].first, mj = mask.kept[j];
    if (xi == mj) {
      out.entries.emplace_back(int(j), x.entries[i].second);
      ++i;
      ++j;
    } else if (xi < mj) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

FeatureMatrix apply_mask(const FeatureMatrix& m, const SelectionMask& mask) {
  FeatureMatrix out;
  out.dim = int(mask.kept.size());
  out.labels = m.labels;
  out.authors = m.authors;
  out.rows.reserve(m.rows.size());
  for (const SparseVector& r : m.rows) out.rows.push_back(apply_mask(r, mask));
  return out;
}

namespace {

ProcessedTweet filter_language(const ProcessedTweet& t, LanguageTag keep) {
  ProcessedTweet out;
  out.gender = t.gender;
  out.author_id = t.author_id;
  out.id = t.id;
  for (size_t i = 0; i < t.tokens.size(); ++i) {
    if (t.langs[i] == keep) {
      out.tokens.push_back(t.tokens[i]);
      out.langs.push_back(t.langs[i]);
    }
  }
  return out;
}

std::vector<ProcessedTweet> filter_corpus(std::span<const ProcessedTweet> corpus, LanguageTag keep) {
  std::vector<ProcessedTweet> out;
  out.reserve(corpus.size());
  for (const ProcessedTweet& t : corpus) out.push_back(filter_language(t, keep));
  return out;
}

}  // namespace

PartitionedVocabulary fit_partitioned(std::span<const ProcessedTweet> corpus,
                                      const FeatureConfig& cfg, Featureset set) {
  PartitionedVocabulary pv;
  auto hi = filter_corpus(corpus, LanguageTag::Hi);
  auto en = filter_corpus(corpus, LanguageTag::En);
  pv.hi = build_vocabulary(hi, cfg, set);
  pv.en = build_vocabulary(en, cfg, set);
  return pv;
}

SparseVector vectorize_partitioned(const ProcessedTweet& t, const PartitionedVocabulary& pv) {
  SparseVector a = vectorize(filter_language(t, LanguageTag::Hi), pv.hi);
  SparseVector b = vectorize(filter_language(t, LanguageTag::En), pv.en);
  SparseVector out;
  out.dim = a.dim + b.dim;
  out.entries = std::move(a.entries);
  for (const auto& [j, v] : b.entries) out.entries.emplace_back(j + a.dim, v);
  return out;
}

FeatureMatrix vectorize_all_partitioned(std::span<const ProcessedTweet> corpus,
                                        const PartitionedVocabulary& pv) {
  FeatureMatrix m;
  m.dim = pv.dim();
  for (const ProcessedTweet& t : corpus) {
    m.rows.push_back(vectorize_partitioned(t, pv));
    m.labels.push_back(t.gender);
    m.authors.push_back(t.author_id);
  }
  return m;
}

// --- persistence ---

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

FeatureKind kind_from_string(const std::string& s, int line) {
  if (s == "char") return FeatureKind::CharNgram;
  if (s == "word") return FeatureKind::WordNgram;
  if (s == "ref") return FeatureKind::RefToken;
  if (s == "tag") return FeatureKind::Hashtag;
  throw ParseError(line, "unknown feature kind '" + s + "'");
}

}  // namespace

void save_vocabulary(const Vocabulary& v, std::ostream& out) {
  const FeatureConfig& cfg = v.config();
  out << "cmix-vocab 1\n";
  out << "featureset " << to_string(v.featureset()) << "\n";
  out << "char " << cfg.char_ngrams.n_min << ' ' << cfg.char_ngrams.n_max << ' '
      << cfg.char_ngrams.min_freq << ' ' << (cfg.char_ngrams.pad ? 1 : 0) << "\n";
  out << "word " << cfg.word_ngrams.n_min << ' ' << cfg.word_ngrams.n_max << ' '
      << cfg.word_ngrams.min_freq << "\n";
  out << "ref " << fmt_double(cfg.ref_tokens.min_share) << ' ' << cfg.ref_tokens.min_freq << "\n";
  out << "hashtag_k " << cfg.hashtag_top_k << "\n";
  out << "dim " << v.dim() << "\n";
  const auto& ids = v.features();
  for (size_t i = 0; i < ids.size(); ++i) {
    out << "f " << i << ' ' << to_string(ids[i].kind) << ' ' << ids[i].order << ' '
        << ids[i].payload << "\n";
  }
}

Vocabulary load_vocabulary(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next = [&]() -> std::string {
    if (!std::getline(in, line)) throw ParseError(lineno, "unexpected end of vocabulary data");
    ++lineno;
    return line;
  };
  if (next() != "cmix-vocab 1") throw ParseError(lineno, "bad vocabulary header");
  FeatureConfig cfg;
  Featureset set = Featureset::All;
  int dim = -1;
  std::vector<FeatureId> ids;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "featureset") {
      std::string name;
      ls >> name;
      set = featureset_from_string(name);
    } else if (tag == "char") {
      int pad = 0;
      ls >> cfg.char_ngrams.n_min >> cfg.char_ngrams.n_max >> cfg.char_ngrams.min_freq >> pad;
      cfg.char_ngrams.pad = pad != 0;
    } else if (tag == "word") {
      ls >> cfg.word_ngrams.n_min >> cfg.word_ngrams.n_max >> cfg.word_ngrams.min_freq;
    } else if (tag == "ref") {
      ls >> cfg.ref_tokens.min_share >> cfg.ref_tokens.min_freq;
    } else if (tag == "hashtag_k") {
      ls >> cfg.hashtag_top_k;
    } else if (tag == "dim") {
      ls >> dim;
      if (!ls || dim < 0) throw ParseError(lineno, "bad dim line");
      break;
    } else {
      throw ParseError(lineno, "unknown vocabulary header line '" + tag + "'");
    }
    if (!ls) throw ParseError(lineno, "malformed vocabulary header line");
  }
  if (dim < 0) throw ParseError(lineno, "missing dim line");
  ids.reserve(size_t(dim));
  for (int i = 0; i < dim; ++i) {
    std::istringstream ls(next());
    std::string tag, kind;
    size_t idx;
    int order;
    ls >> tag >> idx >> kind >> order;
    if (!ls || tag != "f" || idx != size_t(i)) throw ParseError(lineno, "malformed feature line");
    std::string payload;
    std::getline(ls, payload);
    if (!payload.empty() && payload[0] == ' ') payload.erase(0, 1);
    if (payload.empty()) throw ParseError(lineno, "empty feature payload");
    ids.push_back({kind_from_string(kind, lineno), order, std::move(payload)});
  }
  Vocabulary v = Vocabulary::freeze(std::move(ids), cfg, set);
  if (v.dim() != dim) throw ParseError(lineno, "vocabulary contains duplicate features");
  return v;
}

void save_mask(const SelectionMask& m, std::ostream& out) {
  out << "cmix-mask 1\n";
  out << "orig_dim " << m.original_dim << "\n";
  out << "kept " << m.kept.size() << "\n";
  for (int j : m.kept) out << "k " << j << "\n";
  out << "scores " << m.scores.size() << "\n";
  for (double s : m.scores) out << fmt_double(s) << "\n";
}

SelectionMask load_mask(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next = [&]() -> std::istringstream {
    if (!std::getline(in, line)) throw ParseError(lineno, "unexpected end of mask data");
    ++lineno;
    return std::istringstream(line);
  };
  if (next().str() != "cmix-mask 1") throw ParseError(lineno, "bad mask header");
  SelectionMask m;
  std::string tag;
  size_t count = 0;
  {
    auto ls = next();
    ls >> tag >> m.original_dim;
    if (!ls || tag != "orig_dim") throw ParseError(lineno, "bad orig_dim line");
  }
  {
    auto ls = next();
    ls >> tag >> count;
    if (!ls || tag != "kept") throw ParseError(lineno, "bad kept line");
  }
  m.kept.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    auto ls = next();
    int j;
    ls >> tag >> j;
    if (!ls || tag != "k") throw ParseError(lineno, "bad kept entry");
    m.kept.push_back(j);
  }
  {
    auto ls = next();
    ls >> tag >> count;
    if (!ls || tag != "scores") throw ParseError(lineno, "bad scores line");
  }
  m.scores.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    auto ls = next();
    double s;
    ls >> s;
    if (!ls) throw ParseError(lineno, "bad score entry");
    m.scores.push_back(s);
  }
  return m;
}

}  // namespace cmix
