#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tint/pipeline.hpp"

namespace tint {

// category -> UPOS tags it may carry (resources/category-upos.tsv).
class CategoryMap {
 public:
  static CategoryMap parse(std::string_view text);
  static CategoryMap defaults();

  bool compatible(std::string_view category, std::string_view upos) const;

 private:
  std::map<std::string, std::set<std::string, std::less<>>, std::less<>> allowed_;
  std::optional<std::string> rest_;
  std::set<std::string, std::less<>> claimed_;
};

// Articles and the agreement features they impose (resources/articles.tsv).
class ArticleTable {
 public:
  struct Agreement {
    std::optional<std::string> gender;
    std::optional<std::string> number;
  };

  static ArticleTable parse(std::string_view text);
  static ArticleTable defaults();

  // Case-insensitive.
  const Agreement* find(std::string_view form) const;
  std::vector<std::string> forms() const;

 private:
  std::map<std::string, Agreement, std::less<>> entries_;
};

enum class LemmaSource { lexicon_match, decomposition, article_disambiguated, fallback_surface };

std::string_view to_string(LemmaSource source);

struct LemmaDecision {
  std::string lemma;
  LemmaSource source = LemmaSource::fallback_surface;
  std::optional<MorphAnalysis> chosen_analysis;
};

// Analyses whose category may carry `pos`, in their original order.
std::vector<MorphAnalysis> compatible_analyses(const std::vector<MorphAnalysis>& analyses, std::string_view pos,
                                               const CategoryMap& categories = CategoryMap::defaults());

// Looks left of `i` (at most 3 tokens, stopping before a VERB/AUX token) for
// an article and returns the single candidate agreeing with it in gender and
// number. `tokens` is one sentence with POS tags.
std::optional<MorphAnalysis> resolve_by_article(std::span<const Token> tokens, std::size_t i,
                                                const std::vector<MorphAnalysis>& candidates,
                                                const ArticleTable& articles = ArticleTable::defaults());

class Lemmatizer {
 public:
  Lemmatizer() : Lemmatizer(CategoryMap::defaults(), ArticleTable::defaults()) {}
  Lemmatizer(CategoryMap categories, ArticleTable articles)
      : categories_(std::move(categories)), articles_(std::move(articles)) {}

  // Keys: articleFile, categoryFile.
  static Lemmatizer from_properties(const Properties& props);

  // Lemma for tokens[i] of one sentence. Throws MissingPrerequisite when the
  // token has no POS tag.
  LemmaDecision lemmatize(std::span<const Token> sentence, std::size_t i) const;

  void annotate(Document& doc) const;

 private:
  CategoryMap categories_;
  ArticleTable articles_;
};

AnnotatorSpec lemma_spec();
std::unique_ptr<Annotator> make_lemma_annotator(const Properties& props);

}  // namespace tint
