#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tint {

// Small sorted key/value map for morphological features (gender, number,
// person, tense, mood, degree, ...). Analyses carry a handful of entries, so
// a sorted vector beats a node-based map on both memory and lookups.
class FeatureMap {
 public:
  using value_type = std::pair<std::string, std::string>;

  FeatureMap() = default;
  FeatureMap(std::initializer_list<value_type> init) {
    for (const auto& [k, v] : init) set(k, v);
  }

  void set(std::string_view key, std::string_view value) {
    auto it = std::lower_bound(items_.begin(), items_.end(), key,
                               [](const value_type& a, std::string_view k) { return a.first < k; });
    if (it != items_.end() && it->first == key) {
      it->second = value;
    } else {
      items_.emplace(it, std::string(key), std::string(value));
    }
  }

  std::optional<std::string_view> get(std::string_view key) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), key,
                               [](const value_type& a, std::string_view k) { return a.first < k; });
    if (it != items_.end() && it->first == key) return std::string_view(it->second);
    return std::nullopt;
  }

  bool contains(std::string_view key) const { return get(key).has_value(); }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const FeatureMap&, const FeatureMap&) = default;

 private:
  std::vector<value_type> items_;
};

struct Decomposition;

// One candidate (lemma, category, features) explaining a surface form.
// Category is one of: noun, verb, adjective, adverb, determiner, pronoun, other.
struct MorphAnalysis {
  std::string lemma;
  std::string category;
  FeatureMap features;
  // Set only for analyses derived by affix decomposition.
  std::shared_ptr<const Decomposition> derivation;

  friend bool operator==(const MorphAnalysis& a, const MorphAnalysis& b);
};

// prefix + stem + infixes + suffix == surface, and root is the lowercased
// stem followed by `restored` (the elided ending put back, e.g. "portar" +
// "e" -> "portare"; empty when the stem is itself a lexicon key).
struct Decomposition {
  std::optional<std::string> prefix;
  std::string stem;
  std::string restored;
  std::string root;
  std::vector<std::string> infixes;
  std::optional<std::string> suffix;
  MorphAnalysis root_analysis;

  std::size_t affix_count() const {
    return (prefix ? 1 : 0) + infixes.size() + (suffix ? 1 : 0);
  }
  std::string reconstruct() const {
    std::string s = prefix.value_or("") + stem;
    for (const auto& i : infixes) s += i;
    return s + suffix.value_or("");
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

inline bool operator==(const MorphAnalysis& a, const MorphAnalysis& b) {
  if (a.lemma != b.lemma || a.category != b.category || a.features != b.features) return false;
  if (!a.derivation || !b.derivation) return !a.derivation && !b.derivation;
  return *a.derivation == *b.derivation;
}

}  // namespace tint
