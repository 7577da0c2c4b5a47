#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"
#include "tint/bench.hpp"
#include "tint/error.hpp"
#include "tint/registry.hpp"

namespace tint {
namespace {

const char* kCorpus = "Il cane dorme. La mamma porta il latte.\n\nIl dott. Rossi arriva alle 10.30.\n";

TEST(Paragraphs, SplitOnBlankLines) {
  EXPECT_EQ(paragraphs("a\nb\n\n  \nc\n"), (std::vector<std::string>{"a\nb", "c"}));
  EXPECT_TRUE(paragraphs("").empty());
  EXPECT_TRUE(paragraphs("\n\n").empty());
}

TEST(Bench, TenMeasuredRuns) {
  const auto pipeline = pipeline_from_file(testing::desk_assets().config);
  for (auto stage : {BenchStage::tokenize, BenchStage::pos, BenchStage::lemma, BenchStage::full}) {
    const auto report = bench(pipeline, kCorpus, stage, 10, 2);
    EXPECT_EQ(report.runs.size(), 10u);
    EXPECT_EQ(report.warmup, 2u);
    EXPECT_EQ(report.stage, to_string(stage));
    for (const auto& run : report.runs) EXPECT_EQ(run.tokens, 17u);
    EXPECT_GT(report.tokens_per_second, 0.0);
    EXPECT_FALSE(report.environment.empty());
  }
}

TEST(Bench, MeanIsArithmeticMean) {
  const auto pipeline = pipeline_from_file(testing::desk_assets().config);
  const auto report = bench(pipeline, kCorpus, BenchStage::full, 7, 0);
  double sum = 0;
  for (const auto& r : report.runs) sum += r.seconds;
  const double mean = sum / 7.0;
  EXPECT_LE(std::abs(report.mean_seconds - mean), std::nextafter(mean, 2 * mean + 1) - mean);
  EXPECT_DOUBLE_EQ(report.tokens_per_second, 17.0 / report.mean_seconds);
}

TEST(Bench, EmptyCorpusReportsZero) {
  const auto pipeline = pipeline_from_file(testing::desk_assets().config);
  const auto report = bench(pipeline, "", BenchStage::tokenize, 3, 1);
  EXPECT_EQ(report.runs.size(), 3u);
  EXPECT_EQ(report.tokens_per_second, 0.0);
}

TEST(Bench, RepeatedCallsCountTheSameTokens) {
  const auto pipeline = pipeline_from_file(testing::desk_assets().config);
  const auto a = bench(pipeline, kCorpus, BenchStage::lemma, 2, 0);
  const auto b = bench(pipeline, kCorpus, BenchStage::lemma, 2, 0);
  EXPECT_EQ(a.runs.front().tokens, b.runs.front().tokens);
}

TEST(Bench, RejectsMissingStageAndZeroRuns) {
  PipelineConfig c;
  c.annotators = {"tokenize"};
  const auto tokenize_only = Pipeline::build(standard_registry(), c);
  EXPECT_THROW(bench(tokenize_only, kCorpus, BenchStage::pos), Error);
  EXPECT_THROW(bench(tokenize_only, kCorpus, BenchStage::tokenize, 0), Error);
  EXPECT_EQ(parse_bench_stage("lemma"), BenchStage::lemma);
  EXPECT_THROW(parse_bench_stage("ner"), Error);
}

TEST(Bench, ReportSerializesEveryRun) {
  const auto pipeline = pipeline_from_file(testing::desk_assets().config);
  const auto tsv = bench(pipeline, kCorpus, BenchStage::tokenize, 3, 0).to_tsv();
  EXPECT_NE(tsv.find("stage\ttokenize\n"), std::string::npos);
  EXPECT_NE(tsv.find("\nrun\t3\t"), std::string::npos);
  EXPECT_NE(tsv.find("\nenvironment\t"), std::string::npos);
  EXPECT_NE(tsv.find("single-threaded"), std::string::npos);
}

}  // namespace
}  // namespace tint
