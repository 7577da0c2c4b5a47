#include "tint/resources.hpp"

#include "tint/error.hpp"
#include "tint/properties.hpp"

namespace tint::resources {

std::string load(const std::optional<std::filesystem::path>& path, std::string_view bundled_name) {
  if (path) return read_file(*path);
  auto data = embedded(bundled_name);
  if (data.empty()) throw ResourceLoadError("no bundled resource named " + std::string(bundled_name));
  return std::string(data);
}

std::vector<Row> rows(std::string_view text) {
  std::vector<Row> out;
  std::size_t start = 0;
  std::size_t line = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto content = text.substr(start, end - start);
    start = end + 1;
    ++line;
    if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
    const auto first = content.find_first_not_of(" \t");
    if (first == std::string_view::npos || content[first] == '#') continue;
    Row row{line, {}};
    std::size_t f = 0;
    while (true) {
      const auto tab = content.find('\t', f);
      row.fields.push_back(content.substr(f, tab == std::string_view::npos ? tab : tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tint::resources
