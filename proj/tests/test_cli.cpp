#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cmix/corpus.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Shells the actual binary; the command string must already be quoted.
RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path dir = fs::path("cli_tmp");
  fs::create_directories(dir);
  fs::path out = dir / ("out" + std::to_string(counter) + ".txt");
  fs::path err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = std::string(CMIX_BIN) + " " + args + " >" + out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.exit_code = status;
#else
  r.exit_code = WEXITSTATUS(status);
#endif
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string fixture = testutil::fixture_path("fixture10.ann");

std::string write_file(const std::string& name, const std::string& content) {
  fs::create_directories("cli_tmp");
  fs::path p = fs::path("cli_tmp") / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p.string();
}

}  // namespace

TEST_CASE("exit code contract: 0 success, 1 domain, 2 i/o or parse") {
  CHECK(run("validate " + fixture).exit_code == 0);

  std::string bad_tag = write_file(
      "bad_tag.ann",
      "<tweet id=\"1\">\n<word lang=\"Fr\">oui</word>\n<gender>male</gender>\n</tweet>\n");
  RunResult bad = run("validate " + bad_tag);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("unknown lang tag") != std::string::npos);

  CHECK(run("validate cli_tmp/definitely_missing.ann").exit_code == 2);

  std::string broken = write_file("broken.ann", "garbage line\n");
  CHECK(run("validate " + broken).exit_code == 2);

  std::string single_class = write_file(
      "single.ann",
      "<tweet id=\"1\" author=\"a\">\n<word lang=\"O\">x</word>\n<gender>male</gender>\n</tweet>\n"
      "<tweet id=\"2\" author=\"b\">\n<word lang=\"O\">y</word>\n<gender>male</gender>\n</tweet>\n"
      "<tweet id=\"3\" author=\"c\">\n<word lang=\"O\">z</word>\n<gender>male</gender>\n</tweet>\n");
  RunResult ev = run("evaluate " + single_class + " --folds 3 --classifier nb");
  CHECK(ev.exit_code == 1);
}

TEST_CASE("stats renders the table and a parseable json dump") {
  RunResult table = run("stats " + fixture);
  CHECK(table.exit_code == 0);
  CHECK(table.out.find("Total words") != std::string::npos);
  CHECK(table.out.find("56") != std::string::npos);

  RunResult structured = run("stats " + fixture + " --format json");
  CHECK(structured.exit_code == 0);
  auto j = nlohmann::json::parse(structured.out);
  CHECK(j["total_tweets"] == 10);
  CHECK(j["words_hi"] == 25);
  CHECK(j["words_en"] == 11);
  CHECK(j["male_tweets"] == 5);
  CHECK(j["avg_words_per_tweet"]["female"] == doctest::Approx(6.2));

  RunResult empty_corpus = run("stats " + write_file("empty.ann", ""));
  CHECK(empty_corpus.exit_code == 0);
  CHECK(empty_corpus.out.find("0") != std::string::npos);
}

TEST_CASE("ingest writes an annotation skeleton that validate flags") {
  std::string raw = write_file("raw.jsonl",
                               R"({"id":"100","text":"Dekho @modi ji http://t.co/x #Wah","user":"u"})"
                               "\n"
                               R"({"id":"101","text":"kya baat"})"
                               "\n");
  RunResult r = run("ingest " + raw + " cli_tmp/skeleton.ann");
  CHECK(r.exit_code == 0);
  std::string skeleton = slurp("cli_tmp/skeleton.ann");
  CHECK(skeleton.find("<word lang=\"O\">mention</word>") != std::string::npos);
  CHECK(skeleton.find("<word lang=\"O\">url</word>") != std::string::npos);
  CHECK(skeleton.find("#wah") != std::string::npos);  // hashtags survive for the annotator
  CHECK(skeleton.find("<gender>unknown</gender>") != std::string::npos);

  // the placeholder fields surface as violations
  RunResult v = run("validate cli_tmp/skeleton.ann");
  CHECK(v.exit_code == 1);
  CHECK(v.out.find("empty author attribute") != std::string::npos);
  CHECK(v.out.find("unknown gender value 'unknown'") != std::string::npos);

  // idempotent: same input, byte-identical output
  RunResult again = run("ingest " + raw + " cli_tmp/skeleton2.ann");
  CHECK(again.exit_code == 0);
  CHECK(slurp("cli_tmp/skeleton2.ann") == skeleton);

  // fail-fast vs --skip-bad
  std::string mixed = write_file("mixed.jsonl",
                                 R"({"id":"1","text":"ok"})"
                                 "\n{not json\n"
                                 R"({"id":"2","text":"also ok"})"
                                 "\n");
  CHECK(run("ingest " + mixed + " cli_tmp/fail.ann").exit_code == 2);
  RunResult skipped = run("ingest " + mixed + " cli_tmp/skip.ann --skip-bad");
  CHECK(skipped.exit_code == 0);
  CHECK(skipped.err.find("skipped") != std::string::npos);
  CHECK(skipped.out.find("2 skeleton record(s)") != std::string::npos);
}

TEST_CASE("generate is deterministic and its corpus validates") {
  RunResult a = run("generate --out cli_tmp/gen_a.ann --seed 7 --authors 8 --tweets-per-author 4");
  RunResult b = run("generate --out cli_tmp/gen_b.ann --seed 7 --authors 8 --tweets-per-author 4");
  CHECK(a.exit_code == 0);
  CHECK(slurp("cli_tmp/gen_a.ann") == slurp("cli_tmp/gen_b.ann"));
  CHECK(run("validate cli_tmp/gen_a.ann").exit_code == 0);

  RunResult c = run("generate --out cli_tmp/gen_c.ann --seed 8 --authors 8 --tweets-per-author 4");
  CHECK(c.exit_code == 0);
  CHECK(slurp("cli_tmp/gen_c.ann") != slurp("cli_tmp/gen_a.ann"));

  CHECK(run("generate --out cli_tmp/gen_d.ann --authors 1").exit_code == 1);
  CHECK(run("generate --out cli_tmp/gen_e.ann --signal 1.5").exit_code == 1);
}

TEST_CASE("evaluate is reproducible and prints one line per fold") {
  run("generate --out cli_tmp/eval.ann --seed 3 --authors 10 --tweets-per-author 5");
  std::string args =
      "evaluate cli_tmp/eval.ann --featureset bag-of-words --classifier nb --folds 5 --seed 7 "
      "--word-min-freq 2 --select 100";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  int fold_lines = 0;
  std::istringstream lines(a.out);
  std::string line;
  while (std::getline(lines, line))
    if (line.rfind("fold", 0) == 0) ++fold_lines;
  CHECK(fold_lines == 5);
  CHECK(a.out.find("mean accuracy:") != std::string::npos);
  CHECK(a.out.find("seed=7") != std::string::npos);  // fingerprint carries the config

  RunResult json_run = run(args + " --format json");
  auto j = nlohmann::json::parse(json_run.out);
  CHECK(j["folds"] == 5);
  CHECK(j["fold_accuracy"].size() == 5);
  CHECK(j["fingerprint"].get<std::string>().find("seed=7") != std::string::npos);

  // too many folds for the author count advises a smaller fold count
  RunResult too_many = run("evaluate cli_tmp/eval.ann --folds 11 --classifier nb");
  CHECK(too_many.exit_code == 1);
  CHECK(too_many.err.find("fold count") != std::string::npos);

  // language-partitioned featurization runs end to end
  RunResult part = run(args + " --partitioned");
  CHECK(part.exit_code == 0);
  CHECK(part.out.find("partitioned") != std::string::npos);
}

TEST_CASE("train writes a reloadable pipeline and reports the selected dimension") {
  run("generate --out cli_tmp/train.ann --seed 5 --authors 10 --tweets-per-author 6");
  RunResult t = run(
      "train cli_tmp/train.ann --featureset all --model nb --out cli_tmp/model.cmix --seed 2 "
      "--char-min-freq 5 --word-min-freq 5 --select 400");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("after selection") != std::string::npos);
  CHECK(fs::exists("cli_tmp/model.cmix"));

  // single-class corpus fails with a domain error
  std::string single_class = write_file(
      "train_single.ann",
      "<tweet id=\"1\" author=\"a\">\n<word lang=\"O\">x</word>\n<gender>male</gender>\n</tweet>\n");
  CHECK(run("train " + single_class + " --model nb --out cli_tmp/nope.cmix").exit_code == 1);
}

TEST_CASE("experiment restricted to one classifier still renders") {
  run("generate --out cli_tmp/exp.ann --seed 9 --authors 9 --tweets-per-author 4");
  RunResult r = run(
      "experiment cli_tmp/exp.ann --folds 3 --seed 2 --classifiers nb "
      "--featuresets char-ngrams,all --char-min-freq 2 --word-min-freq 2 --select 150");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Naive Bayes") != std::string::npos);
  CHECK(r.out.find("Character N grams") != std::string::npos);
  size_t footer = r.out.find("Published baseline");
  REQUIRE(footer != std::string::npos);
  // the SVM column was excluded, so it shows up only in the reference footer
  size_t svm_pos = r.out.find("Kernel SVM");
  bool svm_only_in_footer = svm_pos == std::string::npos || svm_pos > footer;
  CHECK(svm_only_in_footer);
  CHECK(r.out.find("89.7") != std::string::npos);  // reference context is printed
}

TEST_CASE("command-line misuse is rejected") {
  CHECK(run("stats " + fixture + " --format yaml").exit_code != 0);
  CHECK(run("frobnicate").exit_code != 0);
  CHECK(run("validate").exit_code != 0);
}
