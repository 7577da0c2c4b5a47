#include "tint/pos_tagger.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <random>

#include "binary_io.hpp"
#include "tint/error.hpp"
#include "tint/properties.hpp"
#include "tint/utf8.hpp"

namespace tint {

bool is_upos(std::string_view tag) { return std::find(kUpos.begin(), kUpos.end(), tag) != kUpos.end(); }

char coarse_map(std::string_view upos) {
  if (upos == "NOUN" || upos == "PROPN") return 'N';
  if (upos == "VERB" || upos == "AUX") return 'V';
  if (upos == "ADV") return 'B';
  if (upos == "ADJ") return 'A';
  if (!is_upos(upos)) throw UnknownTag(std::string(upos));
  return 'O';
}

// ---------------------------------------------------------------------------
// features

namespace {

constexpr std::string_view kStart = "<S>";
constexpr std::string_view kEnd = "</S>";

std::string word_shape(std::string_view w) {
  std::string shape;
  char last = 0;
  for (std::size_t i = 0; i < w.size();) {
    const auto [cp, len] = utf8::decode(w, i);
    i += len;
    char c;
    if (utf8::is_digit(cp)) {
      c = 'd';
    } else if (utf8::is_upper(cp)) {
      c = 'X';
    } else if (utf8::is_alpha(cp)) {
      c = 'x';
    } else if (cp < 0x80) {
      c = static_cast<char>(cp);
    } else {
      c = '*';
    }
    if (c != last) shape.push_back(c);
    last = c;
  }
  return shape;
}

}  // namespace

SentenceFeatures::SentenceFeatures(std::span<const std::string_view> words)
    : words_(words.begin(), words.end()) {
  init();
}

SentenceFeatures::SentenceFeatures(std::span<const std::string> words) : words_(words.begin(), words.end()) {
  init();
}

void SentenceFeatures::init() {
  lower_.reserve(words_.size());
  shape_.reserve(words_.size());
  for (const auto& w : words_) {
    lower_.push_back(utf8::to_lower(w));
    shape_.push_back(word_shape(w));
  }
}

void SentenceFeatures::extract(std::size_t i, std::string_view prev1, std::string_view prev2,
                               std::vector<std::string>& out) const {
  out.clear();
  const std::string& w = words_[i];
  const std::string& lw = lower_[i];
  auto add = [&](std::string_view id, std::string_view value) {
    std::string f;
    f.reserve(id.size() + value.size());
    f.append(id).append(value);
    out.push_back(std::move(f));
  };
  auto context = [&](std::ptrdiff_t offset) -> std::string_view {
    const auto j = static_cast<std::ptrdiff_t>(i) + offset;
    if (j < 0) return kStart;
    if (j >= static_cast<std::ptrdiff_t>(words_.size())) return kEnd;
    return lower_[static_cast<std::size_t>(j)];
  };

  out.emplace_back("bias");
  add("w=", w);
  add("lw=", lw);
  add("suf1=", utf8::suffix(lw, 1));
  add("suf2=", utf8::suffix(lw, 2));
  add("suf3=", utf8::suffix(lw, 3));
  add("suf4=", utf8::suffix(lw, 4));
  add("pre1=", utf8::prefix(lw, 1));
  add("pre2=", utf8::prefix(lw, 2));
  if (std::any_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; })) out.emplace_back("digit=1");
  if (w.find('-') != std::string::npos) out.emplace_back("hasHyphen=1");
  if (utf8::starts_upper(w)) out.emplace_back("cap=1");
  add("shape=", shape_[i]);
  add("w-1=", context(-1));
  add("w-2=", context(-2));
  add("w+1=", context(1));
  add("w+2=", context(2));
  add("t-1=", prev1);
  add("t-2=", prev2);
  std::string joint("t-2,t-1=");
  joint.append(prev2).append(",").append(prev1);
  out.push_back(std::move(joint));
  std::string tw("t-1,lw=");
  tw.append(prev1).append(",").append(lw);
  out.push_back(std::move(tw));
}

std::vector<std::string> extract_features(std::span<const std::string_view> words, std::size_t i,
                                          std::span<const std::string> prev_tags) {
  SentenceFeatures ctx(words);
  const std::string_view p1 = prev_tags.size() >= 1 && i >= 1 ? std::string_view(prev_tags[i - 1]) : kStart;
  const std::string_view p2 = prev_tags.size() >= 2 && i >= 2 ? std::string_view(prev_tags[i - 2]) : kStart;
  std::vector<std::string> out;
  ctx.extract(i, p1, p2, out);
  return out;
}

// ---------------------------------------------------------------------------
// scoring and decoding

namespace {

void score(const TaggerModel& model, const std::vector<std::string>& features, std::vector<double>& scores) {
  scores.assign(model.tagset.size(), 0.0);
  for (const auto& f : features) {
    auto it = model.weights.find(std::string_view(f));
    if (it == model.weights.end()) continue;
    const auto& row = it->second;
    for (std::size_t k = 0; k < scores.size(); ++k) scores[k] += row[k];
  }
}

std::size_t argmax(const std::vector<double>& scores) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best;
}

std::vector<std::string> greedy(const TaggerModel& model, const SentenceFeatures& ctx) {
  std::vector<std::string> tags;
  tags.reserve(ctx.size());
  std::vector<std::string> features;
  std::vector<double> scores;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const std::string_view p1 = i >= 1 ? std::string_view(tags[i - 1]) : kStart;
    const std::string_view p2 = i >= 2 ? std::string_view(tags[i - 2]) : kStart;
    ctx.extract(i, p1, p2, features);
    score(model, features, scores);
    tags.push_back(model.tagset[argmax(scores)]);
  }
  return tags;
}

std::vector<std::string> beam_search(const TaggerModel& model, const SentenceFeatures& ctx, std::size_t width) {
  struct Hyp {
    std::vector<std::size_t> tags;
    double score;
  };
  std::vector<Hyp> beam{{{}, 0.0}};
  std::vector<std::string> features;
  std::vector<double> scores;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    std::vector<Hyp> next;
    for (const auto& h : beam) {
      const std::string_view p1 = i >= 1 ? std::string_view(model.tagset[h.tags[i - 1]]) : kStart;
      const std::string_view p2 = i >= 2 ? std::string_view(model.tagset[h.tags[i - 2]]) : kStart;
      ctx.extract(i, p1, p2, features);
      score(model, features, scores);
      for (std::size_t k = 0; k < scores.size(); ++k) {
        Hyp n{h.tags, h.score + scores[k]};
        n.tags.push_back(k);
        next.push_back(std::move(n));
      }
    }
    // stable: equal scores keep hypothesis order, then tagset order
    std::stable_sort(next.begin(), next.end(), [](const Hyp& a, const Hyp& b) { return a.score > b.score; });
    if (next.size() > width) next.resize(width);
    beam = std::move(next);
  }
  std::vector<std::string> out;
  for (auto k : beam.front().tags) out.push_back(model.tagset[k]);
  return out;
}

}  // namespace

std::vector<std::string> tag_sentence(const TaggerModel& model, std::span<const std::string_view> words,
                                      std::size_t beam) {
  if (words.empty() || model.tagset.empty()) return std::vector<std::string>(words.size());
  SentenceFeatures ctx(words);
  return beam <= 1 ? greedy(model, ctx) : beam_search(model, ctx, beam);
}

std::vector<std::string> tag_sentence(const TaggerModel& model, std::span<const std::string> words,
                                      std::size_t beam) {
  if (words.empty() || model.tagset.empty()) return std::vector<std::string>(words.size());
  SentenceFeatures ctx(words);
  return beam <= 1 ? greedy(model, ctx) : beam_search(model, ctx, beam);
}

double tagging_accuracy(const TaggerModel& model, const std::vector<TaggedSentence>& gold, std::size_t beam) {
  std::size_t total = 0;
  std::size_t correct = 0;
  for (const auto& s : gold) {
    const auto tags = tag_sentence(model, std::span<const std::string>(s.words), beam);
    for (std::size_t i = 0; i < tags.size(); ++i) correct += tags[i] == s.tags[i];
    total += tags.size();
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

// ---------------------------------------------------------------------------
// training

namespace {

// Averaged perceptron with lazy accumulation: each weight remembers when it
// last changed, so its running total is brought up to date only on update.
// The average is over the weights held after every training instance.
class Averager {
 public:
  explicit Averager(std::size_t tags) : tags_(tags) {}

  struct Cell {
    std::vector<double> weight;
    std::vector<double> total;
    std::vector<std::uint64_t> stamp;
  };

  void tick() { ++instances_; }

  void update(const std::string& feature, std::size_t tag, double delta) {
    auto it = cells_.find(feature);
    if (it == cells_.end()) {
      it = cells_.emplace(feature, Cell{std::vector<double>(tags_, 0.0), std::vector<double>(tags_, 0.0),
                                        std::vector<std::uint64_t>(tags_, 0)})
               .first;
    }
    Cell& c = it->second;
    c.total[tag] += static_cast<double>(instances_ - c.stamp[tag]) * c.weight[tag];
    c.stamp[tag] = instances_;
    c.weight[tag] += delta;
  }

  // Current (non-averaged) weights, as used for prediction during training.
  const std::unordered_map<std::string, Cell, StringHash, std::equal_to<>>& cells() const { return cells_; }

  void averaged(TaggerModel& model) const {
    model.weights.clear();
    if (instances_ == 0) return;
    for (const auto& [feature, c] : cells_) {
      std::vector<double> row(tags_, 0.0);
      bool nonzero = false;
      for (std::size_t k = 0; k < tags_; ++k) {
        const double total = c.total[k] + static_cast<double>(instances_ - c.stamp[k]) * c.weight[k];
        row[k] = total / static_cast<double>(instances_);
        nonzero = nonzero || row[k] != 0.0;
      }
      if (nonzero) model.weights.emplace(feature, std::move(row));
    }
  }

 private:
  std::size_t tags_;
  std::uint64_t instances_ = 0;
  std::unordered_map<std::string, Cell, StringHash, std::equal_to<>> cells_;
};

std::string corpus_text(const std::vector<TaggedSentence>& corpus) {
  std::string text;
  for (const auto& s : corpus) {
    for (std::size_t i = 0; i < s.words.size(); ++i) text.append(s.words[i]).append("\t").append(s.tags[i]).append("\n");
    text.append("\n");
  }
  return text;
}

}  // namespace

TaggerModel train(const std::vector<TaggedSentence>& corpus, const TrainOptions& options,
                  const std::vector<TaggedSentence>* dev, const std::function<void(const EpochStats&)>& on_epoch) {
  std::size_t tokens = 0;
  std::map<std::string, std::size_t> freq;
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    const auto& sent = corpus[s];
    if (sent.tags.size() != sent.words.size()) throw MissingGoldTag(s, std::min(sent.tags.size(), sent.words.size()));
    for (std::size_t i = 0; i < sent.tags.size(); ++i) {
      if (sent.tags[i].empty() || sent.tags[i] == "_") throw MissingGoldTag(s, i);
      ++freq[sent.tags[i]];
    }
    tokens += sent.words.size();
  }
  if (tokens == 0) throw EmptyCorpus();

  TaggerModel model;
  model.epochs = options.epochs;
  model.seed = options.seed;
  model.corpus_checksum = bin::sha256(corpus_text(corpus));
  std::vector<std::pair<std::string, std::size_t>> by_freq(freq.begin(), freq.end());
  std::stable_sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  for (const auto& [tag, n] : by_freq) model.tagset.push_back(tag);
  std::unordered_map<std::string_view, std::size_t> tag_index;
  for (std::size_t k = 0; k < model.tagset.size(); ++k) tag_index[model.tagset[k]] = k;

  Averager avg(model.tagset.size());
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(options.seed);

  std::vector<SentenceFeatures> contexts;
  contexts.reserve(corpus.size());
  for (const auto& s : corpus) contexts.emplace_back(std::span<const std::string>(s.words));

  std::vector<std::string> features;
  std::vector<double> scores(model.tagset.size());
  for (std::uint32_t epoch = 1; epoch <= options.epochs; ++epoch) {
    // Fisher-Yates with raw engine output, identical on every standard library
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

    std::size_t correct = 0;
    for (const auto s : order) {
      const auto& sent = corpus[s];
      const auto& ctx = contexts[s];
      std::vector<std::size_t> predicted;
      predicted.reserve(sent.words.size());
      for (std::size_t i = 0; i < sent.words.size(); ++i) {
        const std::string_view p1 = i >= 1 ? std::string_view(model.tagset[predicted[i - 1]]) : kStart;
        const std::string_view p2 = i >= 2 ? std::string_view(model.tagset[predicted[i - 2]]) : kStart;
        ctx.extract(i, p1, p2, features);
        std::fill(scores.begin(), scores.end(), 0.0);
        for (const auto& f : features) {
          auto it = avg.cells().find(std::string_view(f));
          if (it == avg.cells().end()) continue;
          for (std::size_t k = 0; k < scores.size(); ++k) scores[k] += it->second.weight[k];
        }
        const std::size_t guess = argmax(scores);
        const std::size_t truth = tag_index.at(sent.tags[i]);
        if (guess != truth) {
          for (const auto& f : features) {
            avg.update(f, truth, 1.0);
            avg.update(f, guess, -1.0);
          }
        } else {
          ++correct;
        }
        avg.tick();
        predicted.push_back(guess);
      }
    }
    if (on_epoch) {
      EpochStats stats{epoch, static_cast<double>(correct) / static_cast<double>(tokens), -1.0};
      if (dev && !dev->empty()) {
        TaggerModel snapshot;
        snapshot.tagset = model.tagset;
        avg.averaged(snapshot);
        stats.dev_accuracy = tagging_accuracy(snapshot, *dev);
      }
      on_epoch(stats);
    }
  }
  avg.averaged(model);
  return model;
}

// ---------------------------------------------------------------------------
// persistence

namespace {

constexpr char kModelMagic[4] = {'P', 'O', 'S', 'M'};
constexpr std::uint16_t kModelVersion = 1;

using ModelReader = bin::Reader<ModelLoadError>;

}  // namespace

std::string serialize_model(const TaggerModel& model) {
  std::string out;
  out.append(kModelMagic, 4);
  bin::put_u16(out, kModelVersion);
  bin::put_u32(out, model.template_version);
  bin::put_u32(out, model.epochs);
  bin::put_u64(out, model.seed);
  out.append(reinterpret_cast<const char*>(model.corpus_checksum.data()), 32);
  bin::put_u16(out, static_cast<std::uint16_t>(model.tagset.size()));
  for (const auto& t : model.tagset) bin::put_str16(out, t);

  std::vector<const std::pair<const std::string, std::vector<double>>*> rows;
  rows.reserve(model.weights.size());
  for (const auto& entry : model.weights) rows.push_back(&entry);
  std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->first < b->first; });
  bin::put_u64(out, rows.size());
  for (const auto* row : rows) {
    bin::put_str16(out, row->first);
    std::uint16_t nonzero = 0;
    for (double w : row->second) nonzero += w != 0.0;
    bin::put_u16(out, nonzero);
    for (std::size_t k = 0; k < row->second.size(); ++k) {
      if (row->second[k] == 0.0) continue;
      bin::put_u16(out, static_cast<std::uint16_t>(k));
      std::uint64_t bits;
      std::memcpy(&bits, &row->second[k], sizeof bits);
      bin::put_u64(out, bits);
    }
  }
  bin::put_u32(out, bin::crc32(out));
  return out;
}

TaggerModel deserialize_model(std::string_view bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kModelMagic, 4) != 0) throw ModelLoadError("not a POS model (bad magic)");
  if (bytes.size() < 8) throw ModelLoadError("POS model: truncated data");
  ModelReader r(bytes.substr(0, bytes.size() - 4), "POS model");
  r.bytes(4);
  if (r.uint(2) != kModelVersion) throw ModelLoadError("POS model: unsupported version");
  TaggerModel model;
  model.template_version = static_cast<std::uint32_t>(r.uint(4));
  if (model.template_version != kFeatureTemplateVersion) throw ModelLoadError("POS model: unknown feature templates");
  model.epochs = static_cast<std::uint32_t>(r.uint(4));
  model.seed = r.uint(8);
  const auto sum = r.bytes(32);
  std::memcpy(model.corpus_checksum.data(), sum.data(), 32);
  const auto ntags = r.uint(2);
  for (std::uint64_t k = 0; k < ntags; ++k) model.tagset.emplace_back(r.str16());
  const auto nfeatures = r.uint(8);
  for (std::uint64_t f = 0; f < nfeatures; ++f) {
    std::string name(r.str16());
    std::vector<double> row(ntags, 0.0);
    const auto nonzero = r.uint(2);
    for (std::uint64_t j = 0; j < nonzero; ++j) {
      const auto k = r.uint(2);
      if (k >= ntags) throw ModelLoadError("POS model: tag index out of range");
      const std::uint64_t bits = r.uint(8);
      std::memcpy(&row[k], &bits, sizeof bits);
    }
    model.weights.emplace(std::move(name), std::move(row));
  }
  if (!r.done()) throw ModelLoadError("POS model: trailing bytes");
  ModelReader tail(bytes.substr(bytes.size() - 4), "POS model");
  if (tail.uint(4) != bin::crc32(bytes.substr(0, bytes.size() - 4))) throw ModelLoadError("POS model: checksum mismatch");
  return model;
}

void save_model(const TaggerModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ResourceLoadError("cannot write " + path.string());
  out << serialize_model(model);
  if (!out) throw ResourceLoadError("error writing " + path.string());
}

TaggerModel load_model(const std::filesystem::path& path) {
  std::string bytes;
  try {
    bytes = read_file(path);
  } catch (const ResourceLoadError& e) {
    throw ModelLoadError(e.what());
  }
  return deserialize_model(bytes);
}

// ---------------------------------------------------------------------------
// annotator

PosTagger PosTagger::from_properties(const Properties& props) {
  const auto path = props.get_path("model");
  if (!path) throw ResourceLoadError("pos.model is not set");
  const auto beam = props.get_int("beam", 1);
  if (beam < 1) throw ResourceLoadError("pos.beam must be >= 1");
  return PosTagger(std::make_shared<const TaggerModel>(load_model(*path)), static_cast<std::size_t>(beam));
}

void PosTagger::annotate(Document& doc) const {
  std::vector<std::string_view> words;
  for (const auto& s : doc.sentences) {
    words = doc.sentence_surfaces(s);
    auto tags = tag_sentence(*model_, std::span<const std::string_view>(words), beam_);
    for (std::size_t i = 0; i < tags.size(); ++i) doc.tokens[s.first + i].pos = std::move(tags[i]);
  }
}

namespace {

class PosAnnotator final : public Annotator {
 public:
  explicit PosAnnotator(PosTagger tagger) : tagger_(std::move(tagger)) {}
  void annotate(Document& doc) const override { tagger_.annotate(doc); }

 private:
  PosTagger tagger_;
};

}  // namespace

AnnotatorSpec pos_spec() {
  return {"pos", {std::string(layer::tokens), std::string(layer::sentences)}, {std::string(layer::pos)}};
}

std::unique_ptr<Annotator> make_pos_annotator(const Properties& props) {
  return std::make_unique<PosAnnotator>(PosTagger::from_properties(props));
}

}  // namespace tint
