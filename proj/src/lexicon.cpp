#include "tint/lexicon.hpp"

#include <fcntl.h>
#include <sys/mman.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cstring>
#include <fstream>

#include "binary_io.hpp"
#include "tint/error.hpp"
#include "tint/properties.hpp"
#include "tint/resources.hpp"
#include "tint/utf8.hpp"

namespace tint {

// ---------------------------------------------------------------------------
// TagTable

TagTable TagTable::parse(std::string_view text) {
  TagTable table;
  for (const auto& row : resources::rows(text)) {
    const auto& f = row.fields;
    auto bad = [&](const char* why) {
      return ResourceLoadError("tag table line " + std::to_string(row.line) + ": " + why);
    };
    if (f[0] == "pos") {
      if (f.size() != 3) throw bad("expected pos<TAB>SYMBOL<TAB>category");
      if (std::find(kCategories.begin(), kCategories.end(), f[2]) == kCategories.end()) {
        throw bad("unknown category");
      }
      table.categories_[std::string(f[1])] = std::string(f[2]);
    } else if (f[0] == "default") {
      if (f.size() != 2) throw bad("expected default<TAB>category");
      table.default_category_ = std::string(f[1]);
    } else if (f[0] == "attr") {
      if (f.size() != 4) throw bad("expected attr<TAB>SYMBOL<TAB>key<TAB>value");
      table.attrs_[std::string(f[1])] = {std::string(f[2]), std::string(f[3])};
    } else {
      throw bad("unknown row type");
    }
  }
  return table;
}

TagTable TagTable::defaults() {
  static const TagTable table = parse(resources::embedded("morphit-tags.tsv"));
  return table;
}

std::optional<std::pair<std::string, FeatureMap>> TagTable::parse_tag(std::string_view tag) const {
  if (tag.empty()) return std::nullopt;
  const auto colon = tag.find(':');
  const auto head = tag.substr(0, colon);
  const auto tail = colon == std::string_view::npos ? std::string_view() : tag.substr(colon + 1);

  FeatureMap features;
  auto apply = [&](std::string_view symbol) {
    if (auto it = attrs_.find(symbol); it != attrs_.end()) features.set(it->second.first, it->second.second);
  };

  const auto dash = head.find('-');
  const auto pos = head.substr(0, dash);
  std::string category = default_category_;
  if (auto it = categories_.find(pos); it != categories_.end()) category = it->second;
  if (dash != std::string_view::npos) {
    for (const auto& sym : split_list(head.substr(dash + 1), '-')) apply(sym);
  }
  for (const auto& sym : split_list(tail, '+')) apply(sym);
  return std::make_pair(std::move(category), std::move(features));
}

// ---------------------------------------------------------------------------
// binary encoding helpers

namespace {

constexpr char kMagic[4] = {'M', 'L', 'E', 'X'};
constexpr std::size_t kHeaderSize = 80;

using bin::put_str16;
using bin::put_str8;
using bin::put_u16;
using bin::put_u32;
using bin::put_u64;
using bin::put_u8;

class Reader : public bin::Reader<StoreCorrupt> {
 public:
  Reader(const char* data, std::size_t size) : bin::Reader<StoreCorrupt>(data, size, "lexicon store") {}
};

std::uint8_t category_code(std::string_view category) {
  auto it = std::find(kCategories.begin(), kCategories.end(), category);
  return static_cast<std::uint8_t>(it - kCategories.begin());
}

std::uint32_t crc(std::string_view bytes) { return bin::crc32(bytes); }

void encode_entry(std::string& out, std::string_view key, const std::vector<MorphAnalysis>& analyses) {
  put_str16(out, key);
  put_u16(out, static_cast<std::uint16_t>(analyses.size()));
  for (const auto& a : analyses) {
    put_str16(out, a.lemma);
    put_u8(out, category_code(a.category));
    put_u8(out, static_cast<std::uint8_t>(a.features.size()));
    for (const auto& [k, v] : a.features) {
      put_str8(out, k);
      put_str8(out, v);
    }
  }
}

std::vector<MorphAnalysis> decode_analyses(Reader& r) {
  const auto n = r.uint(2);
  std::vector<MorphAnalysis> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    MorphAnalysis a;
    a.lemma = std::string(r.str16());
    const auto cat = r.uint(1);
    if (cat >= kCategories.size()) throw StoreCorrupt("lexicon store: bad category code");
    a.category = std::string(kCategories[cat]);
    const auto nf = r.uint(1);
    for (std::uint64_t k = 0; k < nf; ++k) {
      const auto key = r.str8();
      a.features.set(key, r.str8());
    }
    out.push_back(std::move(a));
  }
  return out;
}

void skip_analyses(Reader& r) {
  const auto n = r.uint(2);
  for (std::uint64_t i = 0; i < n; ++i) {
    r.str16();
    r.uint(1);
    const auto nf = r.uint(1);
    for (std::uint64_t k = 0; k < nf; ++k) {
      r.str8();
      r.str8();
    }
  }
}

bool valid_line_text(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    const auto [cp, len] = utf8::decode(s, i);
    if (cp == utf8::kReplacement && len == 1) return false;
    i += len;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// compile

CompileReport compile_lexicon(std::string_view tsv, const std::filesystem::path& output,
                              const TagTable& tags, std::uint32_t block_size) {
  CompileReport report;
  std::map<std::string, std::vector<MorphAnalysis>, std::less<>> entries;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < tsv.size()) {
    auto end = tsv.find('\n', start);
    if (end == std::string_view::npos) end = tsv.size();
    auto line = tsv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    ++report.lines;

    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      const auto tab = line.find('\t', f);
      fields.push_back(line.substr(f, tab == std::string_view::npos ? tab : tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    if (fields.size() != 3) {
      report.malformed.push_back({line_no, "expected 3 tab-separated fields"});
      continue;
    }
    if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
      report.malformed.push_back({line_no, "empty field"});
      continue;
    }
    if (!valid_line_text(line)) {
      report.malformed.push_back({line_no, "invalid UTF-8"});
      continue;
    }
    if (fields[0].size() > 0xFFFF || fields[1].size() > 0xFFFF) {
      report.malformed.push_back({line_no, "field too long"});
      continue;
    }
    auto parsed = tags.parse_tag(fields[2]);
    MorphAnalysis a{std::string(fields[1]), std::move(parsed->first), std::move(parsed->second), nullptr};
    auto& list = entries[std::string(fields[0])];
    if (std::find(list.begin(), list.end(), a) == list.end()) list.push_back(std::move(a));
  }
  if (report.malformed.size() * 10 > report.lines) {
    throw ParseError(report.malformed.front().line,
                     std::to_string(report.malformed.size()) + " of " + std::to_string(report.lines) +
                         " lexicon lines are malformed (limit 10%)");
  }

  // blocks
  struct Block {
    std::string first_key;
    std::string bytes;
    std::uint32_t count = 0;
  };
  std::vector<Block> blocks;
  std::string entry;
  for (const auto& [key, analyses] : entries) {
    entry.clear();
    encode_entry(entry, key, analyses);
    if (blocks.empty() || (blocks.back().count > 0 && 4 + blocks.back().bytes.size() + entry.size() > block_size)) {
      blocks.push_back({key, {}, 0});
    }
    blocks.back().bytes += entry;
    ++blocks.back().count;
  }

  std::string body;
  std::string index;
  for (const auto& b : blocks) {
    std::string block;
    put_u32(block, b.count);
    block += b.bytes;
    put_str16(index, b.first_key);
    put_u64(index, kHeaderSize + body.size());
    put_u32(index, static_cast<std::uint32_t>(block.size()));
    put_u32(index, crc(block));
    body += block;
  }

  report.header.version = kStoreVersion;
  report.header.entry_count = entries.size();
  report.header.source_checksum = bin::sha256(tsv);
  report.header.block_size = block_size;
  report.header.block_count = static_cast<std::uint32_t>(blocks.size());

  std::string header;
  header.append(kMagic, 4);
  put_u16(header, kStoreVersion);
  put_u16(header, 0);
  put_u64(header, report.header.entry_count);
  header.append(reinterpret_cast<const char*>(report.header.source_checksum.data()), 32);
  put_u32(header, block_size);
  put_u32(header, report.header.block_count);
  put_u64(header, kHeaderSize + body.size());
  put_u64(header, index.size());
  put_u32(header, crc(index));
  put_u32(header, crc(header));

  // write to a temporary name, then rename: a store file is never modified in place
  auto tmp = output;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceLoadError("cannot write " + tmp.string());
    out << header << body << index;
    if (!out) throw ResourceLoadError("error writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, output, ec);
  if (ec) throw ResourceLoadError("cannot create " + output.string() + ": " + ec.message());
  return report;
}

CompileReport compile_lexicon_file(const std::filesystem::path& input, const std::filesystem::path& output,
                                   const TagTable& tags, std::uint32_t block_size) {
  return compile_lexicon(read_file(input), output, tags, block_size);
}

// ---------------------------------------------------------------------------
// LexiconStore

struct LexiconStore::Mapping {
  const char* data = nullptr;
  std::size_t size = 0;

  Mapping(const char* d, std::size_t s) : data(d), size(s) {}
  Mapping(const Mapping&) = delete;
  Mapping& operator=(const Mapping&) = delete;
  ~Mapping() {
    if (data) munmap(const_cast<char*>(data), size);
  }
};

LexiconStore::LexiconStore(LexiconStore&&) noexcept = default;
LexiconStore& LexiconStore::operator=(LexiconStore&&) noexcept = default;
LexiconStore::~LexiconStore() = default;

LexiconStore LexiconStore::open(const std::filesystem::path& path) {
  const int fd = ::open(path.c_str(), O_RDONLY);
  if (fd < 0) throw ResourceLoadError("cannot open lexicon store " + path.string());
  struct stat st {};
  if (fstat(fd, &st) != 0) {
    ::close(fd);
    throw ResourceLoadError("cannot stat " + path.string());
  }
  const auto size = static_cast<std::size_t>(st.st_size);
  if (size < kHeaderSize) {
    ::close(fd);
    throw StoreCorrupt(path.string() + ": file too short for a lexicon store");
  }
  void* addr = mmap(nullptr, size, PROT_READ, MAP_PRIVATE, fd, 0);
  ::close(fd);
  if (addr == MAP_FAILED) throw ResourceLoadError("cannot map " + path.string());

  LexiconStore store;
  store.map_ = std::make_unique<Mapping>(static_cast<const char*>(addr), size);
  const char* data = store.map_->data;
  const auto corrupt = [&](const std::string& why) { return StoreCorrupt(path.string() + ": " + why); };

  if (std::memcmp(data, kMagic, 4) != 0) throw corrupt("bad magic");
  Reader h(data, kHeaderSize);
  h.bytes(4);
  store.header_.version = static_cast<std::uint16_t>(h.uint(2));
  if (store.header_.version != kStoreVersion) throw corrupt("unsupported version");
  h.uint(2);
  store.header_.entry_count = h.uint(8);
  const auto sum = h.bytes(32);
  std::memcpy(store.header_.source_checksum.data(), sum.data(), 32);
  store.header_.block_size = static_cast<std::uint32_t>(h.uint(4));
  store.header_.block_count = static_cast<std::uint32_t>(h.uint(4));
  const auto index_offset = h.uint(8);
  const auto index_length = h.uint(8);
  const auto index_crc = static_cast<std::uint32_t>(h.uint(4));
  const auto header_crc = static_cast<std::uint32_t>(h.uint(4));
  if (crc(std::string_view(data, kHeaderSize - 4)) != header_crc) throw corrupt("header checksum mismatch");
  if (index_offset > size || index_length > size - index_offset) throw corrupt("index out of range");
  const std::string_view index_bytes(data + index_offset, index_length);
  if (crc(index_bytes) != index_crc) throw corrupt("index checksum mismatch");

  Reader idx(index_bytes.data(), index_bytes.size());
  std::uint64_t entries = 0;
  for (std::uint32_t b = 0; b < store.header_.block_count; ++b) {
    IndexEntry e;
    e.first_key = std::string(idx.str16());
    e.offset = idx.uint(8);
    e.length = static_cast<std::uint32_t>(idx.uint(4));
    const auto block_crc = static_cast<std::uint32_t>(idx.uint(4));
    if (e.offset < kHeaderSize || e.offset > index_offset || e.length > index_offset - e.offset) {
      throw corrupt("block out of range");
    }
    const std::string_view block(data + e.offset, e.length);
    if (crc(block) != block_crc) throw corrupt("block checksum mismatch");
    if (!store.index_.empty() && store.index_.back().first_key >= e.first_key) {
      throw corrupt("index keys out of order");
    }
    Reader br(block.data(), block.size());
    entries += br.uint(4);
    store.index_.push_back(std::move(e));
  }
  if (!idx.done()) throw corrupt("trailing index bytes");
  if (entries != store.header_.entry_count) throw corrupt("entry count mismatch");
  return store;
}

std::vector<MorphAnalysis> LexiconStore::find(std::string_view key, std::size_t* probes) const {
  std::size_t count = 0;
  // last block whose first key <= key
  std::size_t lo = 0;
  std::size_t hi = index_.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++count;
    if (std::string_view(index_[mid].first_key) <= key) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (probes) *probes = count;
  if (lo == 0) return {};
  const IndexEntry& e = index_[lo - 1];
  Reader r(map_->data + e.offset, e.length);
  const auto n = r.uint(4);
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto k = r.str16();
    if (k == key) return decode_analyses(r);
    if (k > key) break;
    skip_analyses(r);
  }
  return {};
}

bool LexiconStore::contains(std::string_view key) const { return !find(key).empty(); }

std::vector<MorphAnalysis> LexiconStore::lookup(std::string_view surface, CasePolicy policy) const {
  auto hit = find(surface);
  if (!hit.empty() || policy == CasePolicy::exact || surface.empty()) return hit;
  const auto first = utf8::lower_first(surface);
  if (first != surface) {
    hit = find(first);
    if (!hit.empty() || policy == CasePolicy::fold_first) return hit;
  } else if (policy == CasePolicy::fold_first) {
    return hit;
  }
  const auto all = utf8::to_lower(surface);
  if (all != first) hit = find(all);
  return hit;
}

void LexiconStore::for_each(
    const std::function<void(std::string_view, const std::vector<MorphAnalysis>&)>& fn) const {
  for (const auto& e : index_) {
    Reader r(map_->data + e.offset, e.length);
    const auto n = r.uint(4);
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto k = r.str16();
      fn(k, decode_analyses(r));
    }
  }
}

}  // namespace tint
