#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "tint/lexicon.hpp"
#include "tint/pos_tagger.hpp"

namespace tint::testing {

inline const std::filesystem::path kDataDir = TINT_TEST_DATA_DIR;
inline const std::filesystem::path kResourceDir = TINT_TEST_RESOURCE_DIR;

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& text);

// Lexicon store compiled from `tsv` into `dir`.
std::filesystem::path compile_store(const TempDir& dir, const std::string& tsv, const std::string& name = "lex.mlex");

// Store and tagger from the desk fixtures: the copies prebuilt by the ctest
// fixture when present, otherwise built once per process.
struct DeskAssets {
  std::filesystem::path lexicon;
  std::filesystem::path model;
  std::filesystem::path config;  // tokenize, morph, pos, lemma
};
const DeskAssets& desk_assets();

// Small lexicon with the porta/portare, direzionale and latte/latta entries.
std::string fixture_lexicon();

// Random UTF-8 string mixing letters, accented letters, digits,
// punctuation, whitespace and a few astral-plane characters.
std::string random_text(std::mt19937_64& rng, std::size_t max_chars);

}  // namespace tint::testing
