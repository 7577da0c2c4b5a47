#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tint/pipeline.hpp"

namespace tint {

inline constexpr std::array<std::string_view, 17> kUpos = {
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

bool is_upos(std::string_view tag);

// Five-way evaluation classes: N(oun), V(erb), B (adverb), A(djective), O(ther).
// NOUN/PROPN -> N, VERB/AUX -> V, ADV -> B, ADJ -> A, everything else -> O.
// Throws UnknownTag for strings outside the UPOS inventory.
char coarse_map(std::string_view upos);

inline constexpr std::uint32_t kFeatureTemplateVersion = 1;

// Per-sentence word data shared by the feature templates of every position.
class SentenceFeatures {
 public:
  explicit SentenceFeatures(std::span<const std::string_view> words);
  explicit SentenceFeatures(std::span<const std::string> words);

  std::size_t size() const { return words_.size(); }

  // Appends the features of position i given the two previous predicted tags
  // ("<S>" at the sentence start) to `out`, which is cleared first.
  void extract(std::size_t i, std::string_view prev1, std::string_view prev2,
               std::vector<std::string>& out) const;

 private:
  void init();

  std::vector<std::string> words_;
  std::vector<std::string> lower_;
  std::vector<std::string> shape_;
};

// Feature strings for position i, each prefixed by its template id
// ("w=", "suf3=", "t-1=", ...). prev_tags holds the tags predicted so far.
std::vector<std::string> extract_features(std::span<const std::string_view> words, std::size_t i,
                                          std::span<const std::string> prev_tags);

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
};

struct TaggerModel {
  // Most frequent training tag first; argmax ties resolve in this order.
  std::vector<std::string> tagset;
  std::uint32_t template_version = kFeatureTemplateVersion;
  // feature -> one weight per tagset entry; all-zero rows are not stored
  std::unordered_map<std::string, std::vector<double>, StringHash, std::equal_to<>> weights;
  std::uint32_t epochs = 0;
  std::uint64_t seed = 0;
  std::array<std::uint8_t, 32> corpus_checksum{};

  friend bool operator==(const TaggerModel&, const TaggerModel&) = default;
};

struct TaggedSentence {
  std::vector<std::string> words;
  std::vector<std::string> tags;
};

struct TrainOptions {
  std::uint32_t epochs = 10;
  std::uint64_t seed = 1;
};

struct EpochStats {
  std::uint32_t epoch;
  double train_accuracy;
  double dev_accuracy;  // negative when no dev set was given
};

// Greedy left-to-right averaged perceptron. Sentence order is reshuffled
// every epoch with a generator seeded from options.seed, so the result is a
// pure function of (corpus, epochs, seed). Throws EmptyCorpus, MissingGoldTag.
TaggerModel train(const std::vector<TaggedSentence>& corpus, const TrainOptions& options,
                  const std::vector<TaggedSentence>* dev = nullptr,
                  const std::function<void(const EpochStats&)>& on_epoch = {});

// One tag per word. beam = 1 is greedy decoding.
std::vector<std::string> tag_sentence(const TaggerModel& model, std::span<const std::string_view> words,
                                      std::size_t beam = 1);
std::vector<std::string> tag_sentence(const TaggerModel& model, std::span<const std::string> words,
                                      std::size_t beam = 1);

// Token accuracy of `model` on gold sentences.
double tagging_accuracy(const TaggerModel& model, const std::vector<TaggedSentence>& gold, std::size_t beam = 1);

// Binary model file (see docs/pos-model-format.md). load_model throws
// ModelLoadError on bad magic, version, checksum or truncation.
void save_model(const TaggerModel& model, const std::filesystem::path& path);
std::string serialize_model(const TaggerModel& model);
TaggerModel load_model(const std::filesystem::path& path);
TaggerModel deserialize_model(std::string_view bytes);

class PosTagger {
 public:
  PosTagger(std::shared_ptr<const TaggerModel> model, std::size_t beam = 1)
      : model_(std::move(model)), beam_(beam) {}

  // Keys: model (path, required), beam (default 1).
  static PosTagger from_properties(const Properties& props);

  void annotate(Document& doc) const;
  const TaggerModel& model() const { return *model_; }

 private:
  std::shared_ptr<const TaggerModel> model_;
  std::size_t beam_;
};

AnnotatorSpec pos_spec();
std::unique_ptr<Annotator> make_pos_annotator(const Properties& props);

}  // namespace tint
