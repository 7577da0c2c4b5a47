#include "tint/conllu.hpp"

#include <charconv>

#include <nlohmann/json.hpp>

#include "tint/error.hpp"
#include "tint/properties.hpp"

namespace tint {

std::vector<const ConlluRow*> ConlluSentence::words() const {
  std::vector<const ConlluRow*> out;
  for (const auto& r : rows) {
    if (r.is_word()) out.push_back(&r);
  }
  return out;
}

std::size_t ConlluSentence::word_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.is_word();
  return n;
}

std::optional<std::string> ConlluSentence::text() const {
  for (const auto& c : comments) {
    const auto t = trim(c);
    if (t.rfind("text", 0) != 0) continue;
    const auto rest = trim(std::string_view(t).substr(4));
    if (!rest.empty() && rest[0] == '=') return trim(std::string_view(rest).substr(1));
  }
  return std::nullopt;
}

namespace {

std::optional<std::size_t> number(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

void check_ids(const ConlluSentence& s, std::size_t first_line) {
  std::size_t expected = 1;
  std::size_t line = first_line + s.comments.size();
  for (const auto& r : s.rows) {
    const auto& id = r.id();
    if (r.is_range()) {
      const auto dash = id.find('-');
      const auto a = number(std::string_view(id).substr(0, dash));
      const auto b = number(std::string_view(id).substr(dash + 1));
      if (!a || !b || *a > *b || *a != expected) throw ParseError(line, "bad range id '" + id + "'");
    } else if (r.is_empty_node()) {
      const auto dot = id.find('.');
      if (!number(std::string_view(id).substr(0, dot)) || !number(std::string_view(id).substr(dot + 1))) {
        throw ParseError(line, "bad empty node id '" + id + "'");
      }
    } else {
      const auto n = number(id);
      if (!n) throw ParseError(line, "bad id '" + id + "'");
      if (*n != expected) throw ParseError(line, "expected id " + std::to_string(expected) + ", got " + id);
      ++expected;
    }
    ++line;
  }
}

}  // namespace

std::vector<ConlluSentence> read_conllu(std::string_view text) {
  std::vector<ConlluSentence> out;
  ConlluSentence current;
  std::size_t start_line = 1;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (!current.rows.empty()) {
      check_ids(current, start_line);
      out.push_back(std::move(current));
    } else if (!current.comments.empty()) {
      throw ParseError(line_no, "comment lines without a sentence");
    }
    current = ConlluSentence{};
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      flush();
      start_line = line_no + 1;
      continue;
    }
    if (line.front() == '#') {
      if (!current.rows.empty()) throw ParseError(line_no, "comment inside a sentence");
      current.comments.emplace_back(line.substr(1));
      continue;
    }
    ConlluRow row;
    std::size_t col = 0;
    std::size_t from = 0;
    while (true) {
      const auto tab = line.find('\t', from);
      if (col >= 10) throw ParseError(line_no, "more than 10 columns");
      row.columns[col++] = std::string(line.substr(from, tab == std::string_view::npos ? tab : tab - from));
      if (tab == std::string_view::npos) break;
      from = tab + 1;
    }
    if (col != 10) throw ParseError(line_no, "expected 10 columns, found " + std::to_string(col));
    for (std::size_t c = 0; c < 10; ++c) {
      if (row.columns[c].empty()) throw ParseError(line_no, "empty column " + std::to_string(c + 1));
    }
    current.rows.push_back(std::move(row));
  }
  ++line_no;
  flush();
  return out;
}

std::vector<ConlluSentence> read_conllu_file(const std::filesystem::path& path) {
  return read_conllu(read_file(path));
}

std::string render_conllu(const std::vector<ConlluSentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    for (const auto& c : s.comments) out.append("#").append(c).append("\n");
    for (const auto& r : s.rows) {
      for (std::size_t c = 0; c < 10; ++c) {
        if (c) out.push_back('\t');
        out.append(r.columns[c]);
      }
      out.push_back('\n');
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<TaggedSentence> tagged_sentences(const std::vector<ConlluSentence>& sentences) {
  std::vector<TaggedSentence> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    TaggedSentence t;
    for (const auto* r : s.words()) {
      t.words.push_back(r->form());
      t.tags.push_back(r->upos());
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<std::string>> sentence_words(const std::vector<ConlluSentence>& sentences) {
  std::vector<std::vector<std::string>> out;
  out.reserve(sentences.size());
  for (const auto& s : sentences) {
    auto& words = out.emplace_back();
    for (const auto* r : s.words()) words.push_back(r->form());
  }
  return out;
}

std::string write_conll(const Document& doc) {
  std::string out;
  for (const auto& s : doc.sentences) {
    for (std::size_t i = s.first; i <= s.last; ++i) {
      const Token& t = doc.tokens[i];
      out.append(std::to_string(i - s.first + 1)).push_back('\t');
      out.append(t.surface).push_back('\t');
      out.append(t.lemma ? *t.lemma : "_").push_back('\t');
      out.append(t.pos ? *t.pos : "_");
      for (int c = 4; c < 10; ++c) out.append("\t_");
      out.push_back('\n');
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

using Json = nlohmann::ordered_json;

Json analysis_json(const MorphAnalysis& a) {
  Json j;
  j["lemma"] = a.lemma;
  j["category"] = a.category;
  Json feats = Json::object();
  for (const auto& [k, v] : a.features) feats[k] = v;
  j["features"] = std::move(feats);
  if (a.derivation) {
    const auto& d = *a.derivation;
    Json dj;
    dj["prefix"] = d.prefix ? Json(*d.prefix) : Json(nullptr);
    dj["stem"] = d.stem;
    dj["restored"] = d.restored;
    dj["root"] = d.root;
    dj["infixes"] = d.infixes;
    dj["suffix"] = d.suffix ? Json(*d.suffix) : Json(nullptr);
    j["decomposition"] = std::move(dj);
  }
  return j;
}

}  // namespace

std::string write_json(const Document& doc) {
  Json j;
  j["text"] = doc.text();
  Json sentences = Json::array();
  for (const auto& s : doc.sentences) sentences.push_back(Json{{"first", s.first}, {"last", s.last}});
  j["sentences"] = std::move(sentences);
  Json tokens = Json::array();
  for (const auto& t : doc.tokens) {
    Json tj;
    tj["index"] = t.index;
    tj["begin"] = t.begin;
    tj["end"] = t.end;
    tj["surface"] = t.surface;
    if (t.is_abbreviation) tj["abbreviation"] = true;
    if (t.pattern_kind) tj["pattern"] = std::string(to_string(*t.pattern_kind));
    if (t.pos) tj["pos"] = *t.pos;
    if (t.lemma) tj["lemma"] = *t.lemma;
    if (t.morph) {
      Json m = Json::array();
      for (const auto& a : *t.morph) m.push_back(analysis_json(a));
      tj["morph"] = std::move(m);
    }
    for (const auto& [k, v] : t.extra) tj[k] = v;
    tokens.push_back(std::move(tj));
  }
  j["tokens"] = std::move(tokens);
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace tint
