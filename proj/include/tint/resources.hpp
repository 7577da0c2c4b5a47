#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tint::resources {

// Bundled copy of a file from resources/, by file name. Empty when unknown.
std::string_view embedded(std::string_view name);

// Contents of the file at `path` when given, else the bundled resource.
// Throws ResourceLoadError when the file is unreadable or the bundled name
// is unknown.
std::string load(const std::optional<std::filesystem::path>& path, std::string_view bundled_name);

// One line of a resource file: fields split on TAB, line number kept for
// error messages. Comment lines ('#') and blank lines are skipped.
struct Row {
  std::size_t line;
  std::vector<std::string_view> fields;
};
std::vector<Row> rows(std::string_view text);

}  // namespace tint::resources
