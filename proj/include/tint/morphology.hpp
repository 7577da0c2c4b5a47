#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tint/lexicon.hpp"
#include "tint/pipeline.hpp"

namespace tint {

// Productive prefixes, enclitic clusters and root restoration rules used by
// decompose() (see resources/affixes.tsv).
class AffixTable {
 public:
  struct Cluster {
    std::string form;
    std::vector<std::string> parts;
  };
  struct RestoreRule {
    std::string ending;
    std::string append;
  };

  static AffixTable parse(std::string_view text);
  static AffixTable defaults();

  const std::vector<std::string>& prefixes() const { return prefixes_; }
  const std::vector<Cluster>& clusters() const { return clusters_; }
  const std::vector<RestoreRule>& restore_rules() const { return restore_; }

 private:
  std::vector<std::string> prefixes_;
  std::vector<Cluster> clusters_;
  std::vector<RestoreRule> restore_;
};

// Splits `surface` into prefix? + stem + clitic-cluster? where the stem,
// possibly with its elided ending restored, resolves in the store. Clitic
// splits only accept verb roots in a mood that takes enclitics (infinitive,
// gerund, imperative, participle). Results are ordered best-first: fewest
// affixes, then longest stem, then unrestored stems before restored ones.
std::vector<Decomposition> decompose(const LexiconStore& store, std::string_view surface,
                                     const AffixTable& affixes);

// Token-level analysis: store lookup, falling back to decomposition.
class MorphAnalyzer {
 public:
  MorphAnalyzer(std::shared_ptr<const LexiconStore> store, AffixTable affixes,
                CasePolicy policy = CasePolicy::fold_all)
      : store_(std::move(store)), affixes_(std::move(affixes)), policy_(policy) {}

  // Keys: lexicon (store path, required), affixFile, decompose (bool).
  static MorphAnalyzer from_properties(const Properties& props);

  // Lookup hits as stored; otherwise one analysis per decomposition,
  // carrying the root's lemma, category and features plus the derivation.
  std::vector<MorphAnalysis> analyze(std::string_view surface) const;
  void annotate(Document& doc) const;

  const LexiconStore& store() const { return *store_; }

 private:
  std::shared_ptr<const LexiconStore> store_;
  AffixTable affixes_;
  CasePolicy policy_;
  bool decompose_ = true;
};

AnnotatorSpec morph_spec();
std::unique_ptr<Annotator> make_morph_annotator(const Properties& props);

}  // namespace tint
