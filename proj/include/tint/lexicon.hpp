#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tint/morph_types.hpp"

namespace tint {

inline constexpr std::array<std::string_view, 7> kCategories = {
    "noun", "verb", "adjective", "adverb", "determiner", "pronoun", "other"};

// Table-driven parser for Morph-it style tag strings such as "NOUN-M:s" or
// "VER:ind+pres+3+s" (see resources/morphit-tags.tsv).
class TagTable {
 public:
  static TagTable parse(std::string_view text);
  static TagTable defaults();

  // Category and features for a tag string; nullopt when the tag is empty.
  std::optional<std::pair<std::string, FeatureMap>> parse_tag(std::string_view tag) const;

 private:
  std::map<std::string, std::string, std::less<>> categories_;
  std::string default_category_ = "other";
  std::map<std::string, std::pair<std::string, std::string>, std::less<>> attrs_;
};

// Fixed-size part of the store file (see docs/lexicon-store-format.md).
struct StoreHeader {
  std::uint16_t version = 0;
  std::uint64_t entry_count = 0;
  std::array<std::uint8_t, 32> source_checksum{};
  std::uint32_t block_size = 0;
  std::uint32_t block_count = 0;

  friend bool operator==(const StoreHeader&, const StoreHeader&) = default;
};

inline constexpr std::uint16_t kStoreVersion = 1;
inline constexpr std::uint32_t kDefaultBlockSize = 4096;

struct MalformedLine {
  std::size_t line;
  std::string reason;
};

struct CompileReport {
  StoreHeader header;
  std::size_t lines = 0;  // non-empty input lines
  std::vector<MalformedLine> malformed;
};

// Compiles `form<TAB>lemma<TAB>tag` lines into a store file. Malformed lines
// are skipped and reported; more than 10% malformed lines is a ParseError.
CompileReport compile_lexicon(std::string_view tsv, const std::filesystem::path& output,
                              const TagTable& tags = TagTable::defaults(),
                              std::uint32_t block_size = kDefaultBlockSize);
CompileReport compile_lexicon_file(const std::filesystem::path& input,
                                   const std::filesystem::path& output,
                                   const TagTable& tags = TagTable::defaults(),
                                   std::uint32_t block_size = kDefaultBlockSize);

enum class CasePolicy { exact, fold_first, fold_all };

// Read-only view over a memory-mapped store file: sorted key blocks plus an
// in-memory index holding the first key of every block. Integrity checks run
// once on open.
class LexiconStore {
 public:
  // Throws ResourceLoadError if unreadable, StoreCorrupt if the file fails
  // its magic, version or checksum checks.
  static LexiconStore open(const std::filesystem::path& path);

  LexiconStore(LexiconStore&&) noexcept;
  LexiconStore& operator=(LexiconStore&&) noexcept;
  ~LexiconStore();

  const StoreHeader& header() const { return header_; }
  std::size_t size() const { return header_.entry_count; }

  // Analyses stored under exactly `key`. When `probes` is given it receives
  // the number of index comparisons used to locate the block.
  std::vector<MorphAnalysis> find(std::string_view key, std::size_t* probes = nullptr) const;
  bool contains(std::string_view key) const;

  // exact, then (fold_first) first letter lowercased, then (fold_all) fully
  // lowercased. Empty when every attempted key misses.
  std::vector<MorphAnalysis> lookup(std::string_view surface, CasePolicy policy) const;

  // Visits every entry in key order.
  void for_each(const std::function<void(std::string_view, const std::vector<MorphAnalysis>&)>& fn) const;

 private:
  LexiconStore() = default;

  struct IndexEntry {
    std::string first_key;
    std::uint64_t offset;
    std::uint32_t length;
  };

  struct Mapping;
  std::unique_ptr<Mapping> map_;
  StoreHeader header_;
  std::vector<IndexEntry> index_;
};

}  // namespace tint
