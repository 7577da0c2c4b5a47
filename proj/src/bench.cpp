#include "tint/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "tint/error.hpp"
#include "tint/properties.hpp"

namespace tint {

std::string_view to_string(BenchStage stage) {
  switch (stage) {
    case BenchStage::tokenize:
      return "tokenize";
    case BenchStage::pos:
      return "pos";
    case BenchStage::lemma:
      return "lemma";
    case BenchStage::full:
      return "full";
  }
  return "";
}

BenchStage parse_bench_stage(std::string_view name) {
  for (auto s : {BenchStage::tokenize, BenchStage::pos, BenchStage::lemma, BenchStage::full}) {
    if (to_string(s) == name) return s;
  }
  throw Error("unknown bench stage '" + std::string(name) + "' (expected tokenize, pos, lemma or full)");
}

std::string BenchReport::to_tsv() const {
  std::ostringstream out;
  out.precision(6);
  out << std::fixed;
  out << "stage\t" << stage << "\n";
  out << "runs\t" << runs.size() << "\n";
  out << "warmup\t" << warmup << "\n";
  out << "tokens\t" << (runs.empty() ? 0 : runs.front().tokens) << "\n";
  out << "mean_seconds\t" << mean_seconds << "\n";
  out << "tokens_per_second\t" << tokens_per_second << "\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    out << "run\t" << (i + 1) << "\t" << runs[i].seconds << "\t" << runs[i].tokens << "\n";
  }
  out << "environment\t" << environment << "\n";
  return out.str();
}

std::string environment_note() {
  std::string cpu = "unknown CPU";
  std::ifstream info("/proc/cpuinfo");
  for (std::string line; std::getline(info, line);) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) cpu = trim(std::string_view(line).substr(colon + 1));
      break;
    }
  }
  std::string compiler;
#if defined(__clang__)
  compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  compiler = "gcc " __VERSION__;
#else
  compiler = "unknown compiler";
#endif
#ifdef NDEBUG
  const char* build = "optimized";
#else
  const char* build = "debug";
#endif
  return cpu + "; " + compiler + "; " + build + " build; single-threaded";
}

std::vector<std::string> paragraphs(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (!current.empty()) current.push_back('\n');
    current.append(line);
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

namespace {

std::size_t index_of(const Pipeline& p, std::string_view name, BenchStage stage) {
  const auto i = p.position(name);
  if (!i) throw Error("pipeline has no '" + std::string(name) + "' annotator for bench stage " + std::string(to_string(stage)));
  return *i;
}

std::set<std::size_t> timed_annotators(const Pipeline& p, BenchStage stage) {
  switch (stage) {
    case BenchStage::tokenize:
      return {index_of(p, "tokenize", stage)};
    case BenchStage::pos:
      return {index_of(p, "pos", stage)};
    case BenchStage::lemma:
      return {index_of(p, "morph", stage), index_of(p, "lemma", stage)};
    case BenchStage::full: {
      std::set<std::size_t> all;
      for (std::size_t i = 0; i < p.specs().size(); ++i) all.insert(i);
      return all;
    }
  }
  return {};
}

}  // namespace

BenchReport bench(const Pipeline& pipeline, std::string_view corpus, BenchStage stage, std::size_t runs,
                  std::size_t warmup) {
  if (runs == 0) throw Error("bench needs at least one measured run");
  const auto timed = timed_annotators(pipeline, stage);
  const std::size_t last = timed.empty() ? 0 : *timed.rbegin();

  // Untimed prerequisites must not depend on anything the timed stage produces.
  std::set<std::string> timed_layers;
  for (auto i : timed) timed_layers.insert(pipeline.specs()[i].provided.begin(), pipeline.specs()[i].provided.end());
  std::vector<Document> prepared;
  for (auto& para : paragraphs(corpus)) prepared.emplace_back(std::move(para));
  for (std::size_t i = 0; i < last; ++i) {
    if (timed.contains(i)) continue;
    for (const auto& r : pipeline.specs()[i].required) {
      if (timed_layers.contains(r)) {
        throw Error("annotator '" + pipeline.specs()[i].name + "' needs '" + r + "' from the timed stage");
      }
    }
    for (auto& doc : prepared) pipeline.run(doc, i, i + 1);
  }

  BenchReport report;
  report.stage = std::string(to_string(stage));
  report.warmup = warmup;
  report.environment = environment_note();
  for (std::size_t r = 0; r < warmup + runs; ++r) {
    std::vector<Document> docs = prepared;
    const auto start = std::chrono::steady_clock::now();
    for (auto& doc : docs) {
      for (auto i : timed) pipeline.run(doc, i, i + 1);
    }
    const auto stop = std::chrono::steady_clock::now();
    if (r < warmup) continue;
    BenchRun run;
    run.seconds = std::chrono::duration<double>(stop - start).count();
    for (const auto& doc : docs) run.tokens += doc.tokens.size();
    report.runs.push_back(run);
  }
  double total = 0;
  for (const auto& run : report.runs) total += run.seconds;
  report.mean_seconds = total / static_cast<double>(report.runs.size());
  const auto tokens = report.runs.front().tokens;
  report.tokens_per_second = tokens == 0 || report.mean_seconds <= 0 ? 0.0 : static_cast<double>(tokens) / report.mean_seconds;
  return report;
}

}  // namespace tint
