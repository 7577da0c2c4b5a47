#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tint {

// String key/value settings in the `key = value` properties style.
// Relative paths are resolved against base_dir (the directory of the file
// the properties were loaded from).
class Properties {
 public:
  Properties() = default;
  explicit Properties(std::filesystem::path base_dir) : base_dir_(std::move(base_dir)) {}

  void set(std::string key, std::string value) { values_[std::move(key)] = std::move(value); }
  std::optional<std::string> get(std::string_view key) const;
  std::string get_or(std::string_view key, std::string fallback) const;
  bool get_bool(std::string_view key, bool fallback) const;
  long long get_int(std::string_view key, long long fallback) const;
  bool contains(std::string_view key) const { return values_.find(key) != values_.end(); }

  // Comma-separated value split into trimmed, non-empty items.
  std::vector<std::string> get_list(std::string_view key) const;

  // Value interpreted as a path, resolved against base_dir when relative.
  std::optional<std::filesystem::path> get_path(std::string_view key) const;
  std::vector<std::filesystem::path> get_paths(std::string_view key) const;

  // Keys of the form "<prefix>.<rest>", re-keyed as "<rest>".
  Properties scoped(std::string_view prefix) const;

  const std::filesystem::path& base_dir() const { return base_dir_; }
  const std::map<std::string, std::string, std::less<>>& values() const { return values_; }

 private:
  std::filesystem::path resolve(const std::string& value) const;

  std::filesystem::path base_dir_;
  std::map<std::string, std::string, std::less<>> values_;
};

// Parses `key = value` lines; '#' starts a comment line. Throws ParseError.
Properties parse_properties(std::string_view text, std::filesystem::path base_dir = {});

// Throws ResourceLoadError when the file cannot be read.
Properties load_properties(const std::filesystem::path& path);

std::string trim(std::string_view s);
std::vector<std::string> split_list(std::string_view s, char sep = ',');

// Whole-file read; throws ResourceLoadError.
std::string read_file(const std::filesystem::path& path);

}  // namespace tint
