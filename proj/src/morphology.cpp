#include "tint/morphology.hpp"

#include <algorithm>

#include "tint/error.hpp"
#include "tint/resources.hpp"
#include "tint/utf8.hpp"

namespace tint {

AffixTable AffixTable::parse(std::string_view text) {
  AffixTable table;
  for (const auto& row : resources::rows(text)) {
    const auto& f = row.fields;
    auto bad = [&](const char* why) {
      return ResourceLoadError("affix table line " + std::to_string(row.line) + ": " + why);
    };
    if (f[0] == "prefix") {
      if (f.size() != 2 || f[1].empty()) throw bad("expected prefix<TAB>form");
      table.prefixes_.emplace_back(f[1]);
    } else if (f[0] == "clitic") {
      if (f.size() != 3) throw bad("expected clitic<TAB>cluster<TAB>parts");
      Cluster c{std::string(f[1]), split_list(f[2], ' ')};
      std::string joined;
      for (const auto& p : c.parts) joined += p;
      if (c.parts.empty() || joined != c.form) throw bad("cluster parts do not spell the cluster");
      table.clusters_.push_back(std::move(c));
    } else if (f[0] == "restore") {
      if (f.size() != 3 || f[1].empty() || f[2].empty()) throw bad("expected restore<TAB>ending<TAB>append");
      table.restore_.push_back({std::string(f[1]), std::string(f[2])});
    } else {
      throw bad("unknown row type");
    }
  }
  return table;
}

AffixTable AffixTable::defaults() {
  static const AffixTable table = parse(resources::embedded("affixes.tsv"));
  return table;
}

namespace {

constexpr std::size_t kMinStem = 2;
constexpr std::size_t kMinPrefixedRemainder = 3;

bool takes_enclitics(const MorphAnalysis& a) {
  if (a.category != "verb") return false;
  const auto mood = a.features.get("mood");
  return !mood || *mood == "inf" || *mood == "ger" || *mood == "impr" || *mood == "part";
}

}  // namespace

std::vector<Decomposition> decompose(const LexiconStore& store, std::string_view surface,
                                     const AffixTable& affixes) {
  const std::string lower = utf8::to_lower(surface);
  // slices below index both strings with the same byte offsets
  if (lower.size() != surface.size()) return {};

  std::vector<std::size_t> prefix_ends{0};
  for (const auto& p : affixes.prefixes()) {
    if (lower.starts_with(p) && lower.size() >= p.size() + kMinPrefixedRemainder) prefix_ends.push_back(p.size());
  }

  std::vector<Decomposition> out;
  for (const std::size_t pb : prefix_ends) {
    const AffixTable::Cluster* none = nullptr;
    std::vector<const AffixTable::Cluster*> clitics{none};
    for (const auto& c : affixes.clusters()) {
      if (lower.ends_with(c.form) && lower.size() >= pb + c.form.size() + kMinStem) clitics.push_back(&c);
    }
    for (const auto* cluster : clitics) {
      if (pb == 0 && cluster == nullptr) continue;  // plain lookup, not a decomposition
      const std::size_t se = lower.size() - (cluster ? cluster->form.size() : 0);
      const std::string stem_lower = lower.substr(pb, se - pb);

      std::vector<std::string> endings{""};
      if (cluster) {
        for (const auto& rule : affixes.restore_rules()) {
          if (stem_lower.ends_with(rule.ending)) endings.push_back(rule.append);
        }
      }
      for (const auto& restored : endings) {
        const std::string root = stem_lower + restored;
        for (auto& analysis : store.find(root)) {
          if (cluster && !takes_enclitics(analysis)) continue;
          Decomposition d;
          if (pb > 0) d.prefix = std::string(surface.substr(0, pb));
          d.stem = std::string(surface.substr(pb, se - pb));
          d.restored = restored;
          d.root = root;
          if (cluster) {
            std::size_t at = se;
            for (std::size_t i = 0; i < cluster->parts.size(); ++i) {
              auto part = std::string(surface.substr(at, cluster->parts[i].size()));
              at += cluster->parts[i].size();
              if (i + 1 < cluster->parts.size()) {
                d.infixes.push_back(std::move(part));
              } else {
                d.suffix = std::move(part);
              }
            }
          }
          d.root_analysis = std::move(analysis);
          out.push_back(std::move(d));
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    if (a.affix_count() != b.affix_count()) return a.affix_count() < b.affix_count();
    if (a.stem.size() != b.stem.size()) return a.stem.size() > b.stem.size();
    return a.restored.size() < b.restored.size();
  });
  return out;
}

// ---------------------------------------------------------------------------

MorphAnalyzer MorphAnalyzer::from_properties(const Properties& props) {
  const auto path = props.get_path("lexicon");
  if (!path) throw ResourceLoadError("morph.lexicon is not set");
  auto store = std::make_shared<const LexiconStore>(LexiconStore::open(*path));
  MorphAnalyzer analyzer(std::move(store), AffixTable::parse(resources::load(props.get_path("affixFile"), "affixes.tsv")));
  analyzer.decompose_ = props.get_bool("decompose", true);
  return analyzer;
}

std::vector<MorphAnalysis> MorphAnalyzer::analyze(std::string_view surface) const {
  auto hits = store_->lookup(surface, policy_);
  if (!hits.empty() || !decompose_ || surface.empty()) return hits;
  if (!utf8::is_alpha(utf8::decode(surface, 0).cp)) return hits;
  for (auto& d : decompose(*store_, surface, affixes_)) {
    MorphAnalysis a;
    a.lemma = d.root_analysis.lemma;
    a.category = d.root_analysis.category;
    a.features = d.root_analysis.features;
    a.derivation = std::make_shared<const Decomposition>(std::move(d));
    hits.push_back(std::move(a));
  }
  return hits;
}

void MorphAnalyzer::annotate(Document& doc) const {
  for (auto& t : doc.tokens) t.morph = analyze(t.surface);
}

namespace {

class MorphAnnotator final : public Annotator {
 public:
  explicit MorphAnnotator(MorphAnalyzer analyzer) : analyzer_(std::move(analyzer)) {}
  void annotate(Document& doc) const override { analyzer_.annotate(doc); }

 private:
  MorphAnalyzer analyzer_;
};

}  // namespace

AnnotatorSpec morph_spec() { return {"morph", {std::string(layer::tokens)}, {std::string(layer::morph)}}; }

std::unique_ptr<Annotator> make_morph_annotator(const Properties& props) {
  return std::make_unique<MorphAnnotator>(MorphAnalyzer::from_properties(props));
}

}  // namespace tint
