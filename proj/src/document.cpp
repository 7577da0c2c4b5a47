#include "tint/document.hpp"

#include "tint/utf8.hpp"

namespace tint {

std::string_view to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::email: return "email";
    case PatternKind::url: return "url";
    case PatternKind::number: return "number";
    case PatternKind::date: return "date";
  }
  return "unknown";
}

std::optional<PatternKind> parse_pattern_kind(std::string_view s) {
  if (s == "email") return PatternKind::email;
  if (s == "url") return PatternKind::url;
  if (s == "number") return PatternKind::number;
  if (s == "date") return PatternKind::date;
  return std::nullopt;
}

std::set<std::string> Document::populated_layers() const {
  std::set<std::string> out;
  if (!tokens.empty()) out.emplace(layer::tokens);
  if (!sentences.empty()) out.emplace(layer::sentences);
  for (const auto& t : tokens) {
    if (t.pos) out.emplace(layer::pos);
    if (t.lemma) out.emplace(layer::lemma);
    if (t.morph) out.emplace(layer::morph);
    for (const auto& [name, value] : t.extra) out.insert(name);
  }
  return out;
}

void Document::clear_layer(std::string_view name) {
  if (name == layer::tokens) {
    tokens.clear();
    sentences.clear();
  } else if (name == layer::sentences) {
    sentences.clear();
  } else {
    for (auto& t : tokens) {
      if (name == layer::pos) {
        t.pos.reset();
      } else if (name == layer::lemma) {
        t.lemma.reset();
      } else if (name == layer::morph) {
        t.morph.reset();
      } else if (auto it = t.extra.find(name); it != t.extra.end()) {
        t.extra.erase(it);
      }
    }
  }
}

std::optional<std::string> Document::validate() const {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    const std::string where = "token " + std::to_string(i) + ": ";
    if (t.index != i) return where + "index mismatch";
    if (t.begin >= t.end || t.surface.empty()) return where + "empty span";
    if (t.byte_end > text_.size() || t.byte_begin >= t.byte_end) return where + "byte span out of range";
    if (std::string_view(text_).substr(t.byte_begin, t.byte_end - t.byte_begin) != t.surface) {
      return where + "surface does not match text";
    }
    if (utf8::length(t.surface) != t.end - t.begin) return where + "character span mismatch";
    if (i > 0 && tokens[i - 1].end > t.begin) return where + "tokens overlap or are unordered";
  }
  if (!sentences.empty()) {
    std::size_t next = 0;
    for (const auto& s : sentences) {
      if (s.first != next || s.last < s.first) return std::string("sentence spans do not partition tokens");
      next = s.last + 1;
    }
    if (next != tokens.size()) return std::string("sentence spans do not cover all tokens");
  }
  return std::nullopt;
}

std::vector<std::string_view> Document::sentence_surfaces(const SentenceSpan& s) const {
  std::vector<std::string_view> out;
  out.reserve(s.size());
  for (std::size_t i = s.first; i <= s.last; ++i) out.emplace_back(tokens[i].surface);
  return out;
}

Document make_pretokenized(const std::vector<std::vector<std::string>>& sentences) {
  std::string text;
  std::vector<Token> tokens;
  std::vector<SentenceSpan> spans;
  std::size_t chars = 0;
  for (const auto& sentence : sentences) {
    if (sentence.empty()) continue;
    const std::size_t first = tokens.size();
    for (const auto& word : sentence) {
      if (word.empty()) continue;
      if (!text.empty()) {
        text.push_back(' ');
        ++chars;
      }
      Token t;
      t.index = tokens.size();
      t.byte_begin = text.size();
      t.begin = chars;
      text += word;
      chars += utf8::length(word);
      t.byte_end = text.size();
      t.end = chars;
      t.surface = word;
      tokens.push_back(std::move(t));
    }
    if (tokens.size() > first) spans.push_back({first, tokens.size() - 1});
  }
  Document doc(std::move(text));
  doc.tokens = std::move(tokens);
  doc.sentences = std::move(spans);
  return doc;
}

}  // namespace tint
