#include "tint/properties.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "tint/error.hpp"

namespace tint {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) pos = s.size();
    auto item = trim(s.substr(start, pos - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = pos + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceLoadError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw ResourceLoadError("error while reading " + path.string());
  return ss.str();
}

std::optional<std::string> Properties::get(std::string_view key) const {
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  return std::nullopt;
}

std::string Properties::get_or(std::string_view key, std::string fallback) const {
  auto v = get(key);
  return v ? *v : std::move(fallback);
}

bool Properties::get_bool(std::string_view key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw Error("property " + std::string(key) + ": not a boolean: " + *v);
}

long long Properties::get_int(std::string_view key, long long fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
  if (ec != std::errc() || ptr != v->data() + v->size()) {
    throw Error("property " + std::string(key) + ": not an integer: " + *v);
  }
  return out;
}

std::vector<std::string> Properties::get_list(std::string_view key) const {
  auto v = get(key);
  return v ? split_list(*v) : std::vector<std::string>{};
}

std::filesystem::path Properties::resolve(const std::string& value) const {
  std::filesystem::path p(value);
  if (p.is_relative() && !base_dir_.empty()) return base_dir_ / p;
  return p;
}

std::optional<std::filesystem::path> Properties::get_path(std::string_view key) const {
  auto v = get(key);
  if (!v || v->empty()) return std::nullopt;
  return resolve(*v);
}

std::vector<std::filesystem::path> Properties::get_paths(std::string_view key) const {
  std::vector<std::filesystem::path> out;
  for (const auto& item : get_list(key)) out.push_back(resolve(item));
  return out;
}

Properties Properties::scoped(std::string_view prefix) const {
  Properties out(base_dir_);
  const std::string head = std::string(prefix) + ".";
  for (auto it = values_.lower_bound(head); it != values_.end(); ++it) {
    if (it->first.compare(0, head.size(), head) != 0) break;
    out.set(it->first.substr(head.size()), it->second);
  }
  return out;
}

Properties parse_properties(std::string_view text, std::filesystem::path base_dir) {
  Properties props(std::move(base_dir));
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    auto key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) throw ParseError(line_no, "empty key");
    props.set(std::move(key), trim(std::string_view(line).substr(eq + 1)));
  }
  return props;
}

Properties load_properties(const std::filesystem::path& path) {
  const auto text = read_file(path);
  return parse_properties(text, path.parent_path());
}

}  // namespace tint
