#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tint/bench.hpp"
#include "tint/conllu.hpp"
#include "tint/error.hpp"
#include "tint/eval.hpp"
#include "tint/lexicon.hpp"
#include "tint/pos_tagger.hpp"
#include "tint/registry.hpp"
#include "tint/resources.hpp"
#include "tint/utf8.hpp"

namespace tint::cli {

namespace {

struct AnnotateOptions {
  std::string config;
  std::string format = "conll";
  std::string input;
  std::string output;
  unsigned threads = 1;
  bool global_offsets = false;
};

struct CompileOptions {
  std::string input;
  std::string output;
  std::string tags;
  std::uint32_t block_size = kDefaultBlockSize;
};

struct TrainOptionsCli {
  std::string train;
  std::string dev;
  std::uint32_t epochs = 10;
  std::uint64_t seed = 1;
  std::string out;
};

struct ModelOptions {
  std::string config;
  std::string model;
  std::string lexicon;
};

struct EvalOptions {
  ModelOptions models;
  std::string gold;
  std::string task = "pos";
  std::string mode = "gold";
  std::optional<double> min;
};

struct BenchOptions {
  ModelOptions models;
  std::string stage = "full";
  std::string input;
  std::size_t runs = 10;
  std::size_t warmup = 2;
};

void require_file(const std::string& path) {
  if (!std::filesystem::exists(path)) throw ResourceLoadError("file not found: " + path);
}

// A paragraph of input with the position of its first character.
struct Chunk {
  std::string text;
  std::size_t char_offset = 0;
  std::size_t byte_offset = 0;
};

class ChunkReader {
 public:
  explicit ChunkReader(std::istream& in) : in_(in) {}

  std::optional<Chunk> next() {
    Chunk chunk;
    bool started = false;
    std::string line;
    while (std::getline(in_, line)) {
      const std::size_t line_chars = utf8::length(line);
      const bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (blank) {
        chars_ += line_chars + 1;
        bytes_ += line.size() + 1;
        if (started) return chunk;
        continue;
      }
      if (!started) {
        chunk.char_offset = chars_;
        chunk.byte_offset = bytes_;
        started = true;
      } else {
        chunk.text.push_back('\n');
      }
      chunk.text += line;
      chars_ += line_chars + 1;
      bytes_ += line.size() + 1;
    }
    if (started) return chunk;
    return std::nullopt;
  }

 private:
  std::istream& in_;
  std::size_t chars_ = 0;
  std::size_t bytes_ = 0;
};

std::string render(const Document& doc, const std::string& format) {
  return format == "json" ? write_json(doc) + "\n" : write_conll(doc);
}

int annotate(const AnnotateOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Pipeline pipeline = [&] {
    if (!o.config.empty()) {
      require_file(o.config);
      return pipeline_from_file(o.config);
    }
    PipelineConfig config;
    config.annotators = {"tokenize"};
    return Pipeline::build(standard_registry(), config);
  }();

  std::ifstream file;
  std::istream* source = &in;
  if (!o.input.empty() && o.input != "-") {
    require_file(o.input);
    file.open(o.input, std::ios::binary);
    source = &file;
  }
  std::ofstream out_file;
  std::ostream* sink = &out;
  if (!o.output.empty() && o.output != "-") {
    out_file.open(o.output, std::ios::binary | std::ios::trunc);
    if (!out_file) throw ResourceLoadError("cannot write " + o.output);
    sink = &out_file;
  }

  const unsigned threads = std::max(1u, o.threads);
  const std::size_t batch_size = 16 * threads;
  ChunkReader reader(*source);
  std::size_t paragraphs = 0;
  for (bool more = true; more;) {
    std::vector<Chunk> batch;
    while (batch.size() < batch_size) {
      auto c = reader.next();
      if (!c) {
        more = false;
        break;
      }
      batch.push_back(std::move(*c));
    }
    std::vector<std::string> rendered(batch.size());
    std::vector<std::exception_ptr> failures(batch.size());
    auto work = [&](std::size_t k) {
      for (std::size_t i = k; i < batch.size(); i += threads) {
        try {
          Document doc = pipeline.annotate(batch[i].text);
          if (o.global_offsets) {
            for (auto& t : doc.tokens) {
              t.begin += batch[i].char_offset;
              t.end += batch[i].char_offset;
              t.byte_begin += batch[i].byte_offset;
              t.byte_end += batch[i].byte_offset;
            }
          }
          rendered[i] = render(doc, o.format);
        } catch (...) {
          failures[i] = std::current_exception();
        }
      }
    };
    if (threads == 1 || batch.size() <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work, k);
      work(0);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (failures[i]) std::rethrow_exception(failures[i]);
      *sink << rendered[i];
    }
    paragraphs += batch.size();
  }
  sink->flush();
  err << "annotated " << paragraphs << " paragraph(s)\n";
  return kOk;
}

int compile(const CompileOptions& o, std::ostream& err) {
  require_file(o.input);
  const TagTable tags = o.tags.empty() ? TagTable::defaults() : TagTable::parse(read_file(o.tags));
  const auto report = compile_lexicon_file(o.input, o.output, tags, o.block_size);
  for (const auto& m : report.malformed) err << "skipped line " << m.line << ": " << m.reason << "\n";
  err << "compiled " << report.header.entry_count << " forms into " << report.header.block_count << " blocks ("
      << report.malformed.size() << " malformed of " << report.lines << " lines)\n";
  return kOk;
}

int train_pos(const TrainOptionsCli& o, std::ostream& err) {
  require_file(o.train);
  const auto corpus = tagged_sentences(read_conllu_file(o.train));
  std::vector<TaggedSentence> dev;
  if (!o.dev.empty()) {
    require_file(o.dev);
    dev = tagged_sentences(read_conllu_file(o.dev));
  }
  TrainOptions options;
  options.epochs = o.epochs;
  options.seed = o.seed;
  const auto model = train(corpus, options, dev.empty() ? nullptr : &dev, [&](const EpochStats& s) {
    err << "epoch " << s.epoch << "\ttrain " << s.train_accuracy;
    if (s.dev_accuracy >= 0) err << "\tdev " << s.dev_accuracy;
    err << "\n";
  });
  save_model(model, o.out);
  err << "saved " << model.weights.size() << " features, " << model.tagset.size() << " tags to " << o.out << "\n";
  return kOk;
}

// Pipeline from --config, or assembled from --model / --lexicon.
Pipeline model_pipeline(const ModelOptions& m, std::vector<std::string> annotators, const std::set<std::string>& initial) {
  PipelineConfig config;
  if (!m.config.empty()) {
    require_file(m.config);
    config = PipelineConfig::from_properties(load_properties(m.config));
  }
  config.annotators = std::move(annotators);
  if (!m.model.empty()) {
    require_file(m.model);
    config.properties["pos"].set("model", m.model);
  }
  if (!m.lexicon.empty()) {
    require_file(m.lexicon);
    config.properties["morph"].set("lexicon", m.lexicon);
  }
  return Pipeline::build(standard_registry(), config, initial);
}

int eval(const EvalOptions& o, std::ostream& out) {
  require_file(o.gold);
  const auto gold = read_conllu_file(o.gold);
  const EvalMode mode = o.mode == "raw" ? EvalMode::raw_text : EvalMode::gold_tokens;
  std::vector<std::string> annotators;
  if (mode == EvalMode::raw_text) annotators.push_back("tokenize");
  if (o.task == "lemma") annotators.push_back("morph");
  annotators.push_back("pos");
  if (o.task == "lemma") annotators.push_back("lemma");
  std::set<std::string> initial{"text"};
  if (mode == EvalMode::gold_tokens) initial = {"text", "tokens", "sentences"};
  const Pipeline pipeline = model_pipeline(o.models, annotators, initial);

  Document doc = evaluation_input(gold, mode);
  pipeline.annotate(doc);
  const EvalResult r = o.task == "pos" ? eval_pos(doc, gold, mode) : eval_lemma(doc, gold, mode);
  std::ostringstream line;
  line.precision(6);
  line << std::fixed << o.task << "\t" << r.tokens << "\t" << r.accuracy() << "\n";
  out << line.str();
  if (o.min && r.accuracy() < *o.min) return kBelowThreshold;
  return kOk;
}

int bench_cmd(const BenchOptions& o, std::istream& in, std::ostream& out) {
  std::string corpus;
  if (o.input.empty() || o.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    corpus = buf.str();
  } else {
    require_file(o.input);
    corpus = read_file(o.input);
  }
  const BenchStage stage = parse_bench_stage(o.stage);
  std::vector<std::string> annotators{"tokenize"};
  if (stage != BenchStage::tokenize) annotators.push_back("pos");
  if (stage == BenchStage::lemma || stage == BenchStage::full) {
    annotators.push_back("morph");
    annotators.push_back("lemma");
  }
  const Pipeline pipeline = model_pipeline(o.models, annotators, {"text"});
  out << bench(pipeline, corpus, stage, o.runs, o.warmup).to_tsv();
  return kOk;
}

void add_model_options(CLI::App* cmd, ModelOptions& m) {
  cmd->add_option("--config", m.config, "Properties file (annotator settings)");
  cmd->add_option("--model", m.model, "POS model file (sets pos.model)");
  cmd->add_option("--lexicon", m.lexicon, "Compiled lexicon store (sets morph.lexicon)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Italian text annotation: tokenization, morphology, POS tagging, lemmatization"};
  app.name("tint");
  app.require_subcommand(1, 1);

  AnnotateOptions ann;
  auto* annotate_cmd = app.add_subcommand("annotate", "Annotate plain text (paragraphs split on blank lines)");
  annotate_cmd->add_option("--config", ann.config, "Pipeline properties file (default: tokenize only)");
  annotate_cmd->add_option("--format", ann.format, "Output format: conll or json")
      ->check(CLI::IsMember({"conll", "json"}));
  annotate_cmd->add_option("--input,-i", ann.input, "Input file (default: standard input)");
  annotate_cmd->add_option("--output,-o", ann.output, "Output file (default: standard output)");
  annotate_cmd->add_option("--threads", ann.threads, "Paragraphs annotated concurrently")->check(CLI::PositiveNumber);
  annotate_cmd->add_flag("--global-offsets", ann.global_offsets,
                         "Offsets relative to the whole input instead of each paragraph");

  CompileOptions comp;
  auto* compile_cmd = app.add_subcommand("compile-lexicon", "Compile a form/lemma/tag TSV into a lexicon store");
  compile_cmd->add_option("--input,-i", comp.input, "Lexicon TSV (form<TAB>lemma<TAB>tag)")->required();
  compile_cmd->add_option("--output,-o", comp.output, "Store file to write")->required();
  compile_cmd->add_option("--tags", comp.tags, "Tag grammar table (default: bundled)");
  compile_cmd->add_option("--block-size", comp.block_size, "Target block size in bytes")->check(CLI::Range(256u, 1u << 24));

  TrainOptionsCli tr;
  auto* train_cmd = app.add_subcommand("train-pos", "Train the POS tagger on CoNLL-U data");
  train_cmd->add_option("--train", tr.train, "Training CoNLL-U file")->required();
  train_cmd->add_option("--dev", tr.dev, "Development CoNLL-U file (accuracy per epoch)");
  train_cmd->add_option("--epochs", tr.epochs, "Training epochs")->check(CLI::Range(1u, 1000u));
  train_cmd->add_option("--seed", tr.seed, "Shuffle seed");
  train_cmd->add_option("--out,-o", tr.out, "Model file to write")->required();

  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "Score POS tags or lemmas against a gold CoNLL-U file");
  eval_cmd->add_option("--gold", ev.gold, "Gold CoNLL-U file")->required();
  eval_cmd->add_option("--task", ev.task, "pos or lemma")->check(CLI::IsMember({"pos", "lemma"}));
  eval_cmd->add_option("--mode", ev.mode, "gold: reuse gold tokens; raw: tokenize the sentence text")
      ->check(CLI::IsMember({"gold", "raw"}));
  eval_cmd->add_option("--min", ev.min, "Exit with status 3 when accuracy is below this value");
  add_model_options(eval_cmd, ev.models);

  BenchOptions be;
  auto* bench_cmd_app = app.add_subcommand("bench", "Measure single-threaded throughput of one stage");
  bench_cmd_app->add_option("--stage", be.stage, "tokenize, pos, lemma or full")
      ->check(CLI::IsMember({"tokenize", "pos", "lemma", "full"}));
  bench_cmd_app->add_option("--input,-i", be.input, "Plain-text corpus (default: standard input)");
  bench_cmd_app->add_option("--runs", be.runs, "Measured runs")->check(CLI::PositiveNumber);
  bench_cmd_app->add_option("--warmup", be.warmup, "Unmeasured runs before timing");
  bench_cmd_app->add_option("--threads", ann.threads, "Ignored: benchmarks always run on one thread");
  add_model_options(bench_cmd_app, be.models);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*annotate_cmd) return annotate(ann, in, out, err);
    if (*compile_cmd) return compile(comp, err);
    if (*train_cmd) return train_pos(tr, err);
    if (*eval_cmd) return eval(ev, out);
    if (*bench_cmd_app) return bench_cmd(be, in, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace tint::cli
