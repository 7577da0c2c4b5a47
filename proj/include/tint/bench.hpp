#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tint/pipeline.hpp"

namespace tint {

enum class BenchStage { tokenize, pos, lemma, full };

std::string_view to_string(BenchStage stage);
// Throws Error for an unknown name.
BenchStage parse_bench_stage(std::string_view name);

struct BenchRun {
  double seconds = 0;
  std::size_t tokens = 0;
};

struct BenchReport {
  std::string stage;
  std::vector<BenchRun> runs;  // measured runs only
  std::size_t warmup = 0;
  double mean_seconds = 0;
  double tokens_per_second = 0;
  std::string environment;

  // Tab-separated, one "key<TAB>value" line per field and one per run.
  std::string to_tsv() const;
};

// CPU model, compiler and build type.
std::string environment_note();

// Splits text into paragraphs on blank lines.
std::vector<std::string> paragraphs(std::string_view text);

// Times one stage of `pipeline` over `corpus`, paragraph by paragraph, on
// the calling thread. Annotators before the stage run once, untimed;
// tokenize times the tokenizer, pos the tagger, lemma the morphological
// analyzer plus lemmatizer, full the whole pipeline. Throws Error when
// runs is 0 or the pipeline lacks the stage.
BenchReport bench(const Pipeline& pipeline, std::string_view corpus, BenchStage stage, std::size_t runs = 10,
                  std::size_t warmup = 2);

}  // namespace tint
