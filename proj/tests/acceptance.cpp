// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails. Accuracy criteria use the UD Italian ISDT treebank and
// the Morph-it lexicon when TINT_UD_DIR / TINT_MORPHIT point at them, and the
// bundled desk fixtures otherwise.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "support.hpp"
#include "tint/bench.hpp"
#include "tint/conllu.hpp"
#include "tint/eval.hpp"
#include "tint/lemmatizer.hpp"
#include "tint/morphology.hpp"
#include "tint/pos_tagger.hpp"
#include "tint/registry.hpp"
#include "tint/tokenizer.hpp"

namespace tint::testing {
namespace {

constexpr double kMinPosAccuracy = 0.96;
constexpr double kMinLemmaAccuracy = 0.94;
constexpr double kMaxTrainSeconds = 600;
constexpr double kMaxEvalSeconds = 10;
constexpr std::size_t kBenchTokens = 1'000'000;
constexpr std::size_t kBenchRuns = 10;
constexpr double kMinTokenizeRate = 40'000;
constexpr double kMinLemmaRate = 40'000;
constexpr double kMinPosRate = 15'000;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail << std::endl;
}

void report(int id, const std::string& name, const CheckResult& r) { report(id, name, r.ok, r.detail); }

std::string fixed(double x, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Dataset {
  std::string name;
  std::filesystem::path train;
  std::filesystem::path test;
  std::filesystem::path lexicon;
};

Dataset dataset() {
  const char* ud = std::getenv("TINT_UD_DIR");
  const char* morphit = std::getenv("TINT_MORPHIT");
  if (ud && morphit) {
    const std::filesystem::path dir(ud);
    return {"UD Italian ISDT + Morph-it", dir / "it_isdt-ud-train.conllu", dir / "it_isdt-ud-test.conllu", morphit};
  }
  const auto desk = kDataDir / "desk";
  return {"bundled desk fixtures", desk / "desk-train.conllu", desk / "desk-test.conllu", desk / "desk-lexicon.tsv"};
}

struct Assets {
  std::filesystem::path model;
  std::filesystem::path lexicon;
};

Assets accuracy_criteria(const Dataset& data, const TempDir& dir) {
  Assets assets{dir / "pos.posm", dir / "lexicon.mlex"};
  const auto train_gold = read_conllu_file(data.train);
  const auto test_gold = read_conllu_file(data.test);

  auto start = std::chrono::steady_clock::now();
  const auto model = train(tagged_sentences(train_gold), TrainOptions{});
  const double train_seconds = seconds_since(start);
  save_model(model, assets.model);

  const auto registry = standard_registry();
  const std::set<std::string> gold_tokens = {"text", "tokens", "sentences"};
  PipelineConfig pos_config;
  pos_config.annotators = {"pos"};
  pos_config.properties["pos"].set("model", assets.model.string());
  const auto pos_pipeline = Pipeline::build(registry, pos_config, gold_tokens);

  start = std::chrono::steady_clock::now();
  auto doc = evaluation_input(test_gold, EvalMode::gold_tokens);
  pos_pipeline.annotate(doc);
  const auto pos = eval_pos(doc, test_gold);
  const double eval_seconds = seconds_since(start);
  report(1, "POS coarse accuracy", pos.accuracy() >= kMinPosAccuracy && train_seconds <= kMaxTrainSeconds && eval_seconds <= kMaxEvalSeconds,
         fixed(100 * pos.accuracy(), 2) + "% on " + std::to_string(pos.tokens) + " words (need >= " +
             fixed(100 * kMinPosAccuracy, 1) + "%), training " + fixed(train_seconds, 1) + " s, evaluation " +
             fixed(eval_seconds, 2) + " s; " + data.name);

  compile_lexicon_file(data.lexicon, assets.lexicon);
  PipelineConfig full;
  full.annotators = {"morph", "pos", "lemma"};
  full.properties["morph"].set("lexicon", assets.lexicon.string());
  full.properties["pos"].set("model", assets.model.string());
  const auto lemma_pipeline = Pipeline::build(registry, full, gold_tokens);
  auto lemma_doc = evaluation_input(test_gold, EvalMode::gold_tokens);
  lemma_pipeline.annotate(lemma_doc);
  const auto lemma = eval_lemma(lemma_doc, test_gold);
  report(2, "Lemma accuracy", lemma.accuracy() >= kMinLemmaAccuracy,
         fixed(100 * lemma.accuracy(), 2) + "% on " + std::to_string(lemma.tokens) + " words (need >= " +
             fixed(100 * kMinLemmaAccuracy, 1) + "%), gold token boundaries; " + data.name);
  return assets;
}

// Plain-text corpus of at least kBenchTokens tokens, five sentences per
// paragraph, built by cycling the "# text" lines of the given CoNLL-U files.
std::string bench_corpus(const std::vector<std::filesystem::path>& sources) {
  std::vector<std::string> lines;
  for (const auto& path : sources) {
    for (const auto& s : read_conllu_file(path)) {
      if (auto t = s.text()) lines.push_back(*t);
    }
  }
  const auto tokenizer = Tokenizer::defaults();
  std::size_t tokens_per_cycle = 0;
  for (const auto& l : lines) tokens_per_cycle += tokenizer.tokenize(l).first.size();
  std::string corpus;
  std::size_t tokens = 0;
  while (tokens < kBenchTokens) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      corpus += lines[i];
      corpus += (i % 5 == 4) ? "\n\n" : " ";
    }
    corpus += "\n\n";
    tokens += tokens_per_cycle;
  }
  return corpus;
}

void throughput_criterion(const Dataset& data, const Assets& assets) {
  PipelineConfig config;
  config.annotators = {"tokenize", "pos", "morph", "lemma"};
  config.properties["pos"].set("model", assets.model.string());
  config.properties["morph"].set("lexicon", assets.lexicon.string());
  const auto pipeline = Pipeline::build(standard_registry(), config);
  const auto corpus = bench_corpus({data.train, data.test});

  struct Stage {
    BenchStage stage;
    const char* label;
    double minimum;
  };
  bool ok = true;
  std::string detail;
  std::string environment;
  std::size_t tokens = 0;
  for (const auto& s : {Stage{BenchStage::tokenize, "tokenize+ssplit", kMinTokenizeRate},
                        Stage{BenchStage::lemma, "morph+lemma", kMinLemmaRate},
                        Stage{BenchStage::pos, "pos", kMinPosRate}}) {
    const auto r = bench(pipeline, corpus, s.stage, kBenchRuns, 2);
    tokens = r.runs.front().tokens;
    environment = r.environment;
    const bool stage_ok = r.tokens_per_second >= s.minimum && tokens >= kBenchTokens;
    ok = ok && stage_ok;
    detail += std::string(detail.empty() ? "" : ", ") + s.label + " " + fixed(r.tokens_per_second, 0) + " tok/s (need >= " +
              fixed(s.minimum, 0) + ")";
  }
  report(3, "Throughput", ok,
         detail + "; " + std::to_string(tokens) + " tokens, " + std::to_string(kBenchRuns) + " runs each; environment: " + environment);
}

}  // namespace
}  // namespace tint::testing

int main() {
  using namespace tint::testing;
  const auto data = dataset();
  std::cout << "dataset: " << data.name << std::endl;
  TempDir dir;
  try {
    const auto assets = accuracy_criteria(data, dir);
    throughput_criterion(data, assets);
  } catch (const std::exception& e) {
    report(1, "Accuracy and throughput", false, std::string("aborted: ") + e.what());
  }
  report(4, "Tokenizer lossless offsets", check_tokenizer_lossless(1000));
  report(5, "Abbreviation suppression", check_abbreviation_suppression());
  report(6, "Lexicon round-trip", check_lexicon_round_trip(12000));
  report(7, "Decomposition cases", check_decomposition_cases());
  report(8, "Lemmatizer article cases", check_article_cases());
  report(9, "Tagger sanity", check_tagger_sanity());
  {
    const auto eval = check_eval_oracle(20);
    const auto align = check_alignment_partition(2000);
    report(10, "Evaluation oracle", eval.ok && align.ok, eval.detail + "; alignment " + align.detail);
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
