#include "tint/lemmatizer.hpp"

#include <algorithm>

#include "tint/error.hpp"
#include "tint/properties.hpp"
#include "tint/resources.hpp"
#include "tint/utf8.hpp"

namespace tint {

CategoryMap CategoryMap::parse(std::string_view text) {
  CategoryMap map;
  for (const auto& row : resources::rows(text)) {
    if (row.fields.size() != 2) throw ParseError(row.line, "expected category<TAB>tags");
    const std::string category(row.fields[0]);
    if (row.fields[1] == "rest") {
      map.rest_ = category;
      continue;
    }
    auto& tags = map.allowed_[category];
    for (const auto& t : split_list(row.fields[1])) {
      tags.insert(t);
      map.claimed_.insert(t);
    }
  }
  return map;
}

CategoryMap CategoryMap::defaults() {
  static const CategoryMap map = parse(resources::embedded("category-upos.tsv"));
  return map;
}

bool CategoryMap::compatible(std::string_view category, std::string_view upos) const {
  if (rest_ && category == *rest_) {
    auto it = allowed_.find(category);
    if (it != allowed_.end() && it->second.contains(upos)) return true;
    return !claimed_.contains(upos);
  }
  auto it = allowed_.find(category);
  return it != allowed_.end() && it->second.contains(upos);
}

ArticleTable ArticleTable::parse(std::string_view text) {
  ArticleTable table;
  auto feature = [](std::string_view v) -> std::optional<std::string> {
    if (v == "-" || v.empty()) return std::nullopt;
    return std::string(v);
  };
  for (const auto& row : resources::rows(text)) {
    if (row.fields.size() != 3) throw ParseError(row.line, "expected form<TAB>gender<TAB>number");
    table.entries_[utf8::to_lower(row.fields[0])] = {feature(row.fields[1]), feature(row.fields[2])};
  }
  return table;
}

ArticleTable ArticleTable::defaults() {
  static const ArticleTable table = parse(resources::embedded("articles.tsv"));
  return table;
}

const ArticleTable::Agreement* ArticleTable::find(std::string_view form) const {
  auto it = entries_.find(utf8::to_lower(form));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> ArticleTable::forms() const {
  std::vector<std::string> out;
  for (const auto& [form, a] : entries_) out.push_back(form);
  return out;
}

std::string_view to_string(LemmaSource source) {
  switch (source) {
    case LemmaSource::lexicon_match:
      return "lexicon_match";
    case LemmaSource::decomposition:
      return "decomposition";
    case LemmaSource::article_disambiguated:
      return "article_disambiguated";
    case LemmaSource::fallback_surface:
      return "fallback_surface";
  }
  return "";
}

std::vector<MorphAnalysis> compatible_analyses(const std::vector<MorphAnalysis>& analyses, std::string_view pos,
                                               const CategoryMap& categories) {
  std::vector<MorphAnalysis> out;
  for (const auto& a : analyses) {
    if (categories.compatible(a.category, pos)) out.push_back(a);
  }
  return out;
}

namespace {

bool is_verbal(const Token& t) { return t.pos && (*t.pos == "VERB" || *t.pos == "AUX"); }

// Nearest article in the window, if any.
const ArticleTable::Agreement* find_article(std::span<const Token> tokens, std::size_t i,
                                            const ArticleTable& articles) {
  for (std::size_t step = 1; step <= 3 && step <= i; ++step) {
    const Token& t = tokens[i - step];
    if (is_verbal(t)) return nullptr;
    if (t.pos && *t.pos != "DET" && *t.pos != "ADP") continue;
    if (const auto* a = articles.find(t.surface)) return a;
  }
  return nullptr;
}

bool agrees(const MorphAnalysis& a, const ArticleTable::Agreement& article) {
  auto same = [&](std::string_view key, const std::optional<std::string>& want) {
    if (!want) return true;
    auto have = a.features.get(key);
    return have && *have == *want;
  };
  return same("gender", article.gender) && same("number", article.number);
}

std::vector<const MorphAnalysis*> agreeing(std::span<const Token> tokens, std::size_t i,
                                           const std::vector<MorphAnalysis>& candidates,
                                           const ArticleTable& articles) {
  std::vector<const MorphAnalysis*> out;
  const auto* article = find_article(tokens, i, articles);
  if (!article) return out;
  for (const auto& c : candidates) {
    if (agrees(c, *article)) out.push_back(&c);
  }
  return out;
}

bool single_lemma(const std::vector<const MorphAnalysis*>& analyses) {
  return !analyses.empty() && std::all_of(analyses.begin(), analyses.end(),
                                          [&](const MorphAnalysis* a) { return a->lemma == analyses.front()->lemma; });
}

LemmaSource source_of(const MorphAnalysis& a) {
  return a.derivation ? LemmaSource::decomposition : LemmaSource::lexicon_match;
}

}  // namespace

std::optional<MorphAnalysis> resolve_by_article(std::span<const Token> tokens, std::size_t i,
                                                const std::vector<MorphAnalysis>& candidates,
                                                const ArticleTable& articles) {
  const auto matches = agreeing(tokens, i, candidates, articles);
  if (matches.size() != 1) return std::nullopt;
  return *matches.front();
}

Lemmatizer Lemmatizer::from_properties(const Properties& props) {
  return Lemmatizer(CategoryMap::parse(resources::load(props.get_path("categoryFile"), "category-upos.tsv")),
                    ArticleTable::parse(resources::load(props.get_path("articleFile"), "articles.tsv")));
}

LemmaDecision Lemmatizer::lemmatize(std::span<const Token> sentence, std::size_t i) const {
  const Token& token = sentence[i];
  if (!token.pos) throw MissingPrerequisite("token " + std::to_string(token.index) + " has no POS tag");
  const std::string& pos = *token.pos;
  static const std::vector<MorphAnalysis> none;
  const auto& analyses = token.morph ? *token.morph : none;

  const auto compatible = compatible_analyses(analyses, pos, categories_);
  std::vector<const MorphAnalysis*> pointers;
  for (const auto& a : compatible) pointers.push_back(&a);

  if (single_lemma(pointers)) return {compatible.front().lemma, source_of(compatible.front()), compatible.front()};

  if (!compatible.empty()) {
    if (pos == "NOUN" || pos == "PROPN") {
      const auto matches = agreeing(sentence, i, compatible, articles_);
      if (single_lemma(matches)) return {matches.front()->lemma, LemmaSource::article_disambiguated, *matches.front()};
    }
    return {compatible.front().lemma, source_of(compatible.front()), compatible.front()};
  }

  for (const auto& a : analyses) {
    if (a.derivation) return {a.derivation->root_analysis.lemma, LemmaSource::decomposition, std::nullopt};
  }

  LemmaDecision d;
  if (pos == "PROPN" || pos == "PUNCT" || pos == "NUM" || pos == "SYM") {
    d.lemma = token.surface;
  } else {
    d.lemma = utf8::to_lower(token.surface);
  }
  return d;
}

void Lemmatizer::annotate(Document& doc) const {
  for (const auto& s : doc.sentences) {
    std::span<const Token> sentence(doc.tokens.data() + s.first, s.size());
    std::vector<std::string> lemmas;
    lemmas.reserve(sentence.size());
    for (std::size_t i = 0; i < sentence.size(); ++i) lemmas.push_back(lemmatize(sentence, i).lemma);
    for (std::size_t i = 0; i < sentence.size(); ++i) doc.tokens[s.first + i].lemma = std::move(lemmas[i]);
  }
}

namespace {

class LemmaAnnotator final : public Annotator {
 public:
  explicit LemmaAnnotator(Lemmatizer lemmatizer) : lemmatizer_(std::move(lemmatizer)) {}
  void annotate(Document& doc) const override { lemmatizer_.annotate(doc); }

 private:
  Lemmatizer lemmatizer_;
};

}  // namespace

AnnotatorSpec lemma_spec() {
  return {"lemma",
          {std::string(layer::tokens), std::string(layer::sentences), std::string(layer::pos),
           std::string(layer::morph)},
          {std::string(layer::lemma)}};
}

std::unique_ptr<Annotator> make_lemma_annotator(const Properties& props) {
  return std::make_unique<LemmaAnnotator>(Lemmatizer::from_properties(props));
}

}  // namespace tint
