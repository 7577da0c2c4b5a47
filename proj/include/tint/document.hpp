#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tint/morph_types.hpp"

namespace tint {

// Capability / layer names shared by the built-in annotators.
namespace layer {
inline constexpr std::string_view text = "text";
inline constexpr std::string_view tokens = "tokens";
inline constexpr std::string_view sentences = "sentences";
inline constexpr std::string_view pos = "pos";
inline constexpr std::string_view morph = "morph";
inline constexpr std::string_view lemma = "lemma";
}  // namespace layer

enum class PatternKind { email, url, number, date };

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> parse_pattern_kind(std::string_view s);

// A token is a span of the document text. begin/end count Unicode scalar
// values (end exclusive); byte_begin/byte_end index the UTF-8 string.
struct Token {
  std::size_t index = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t byte_begin = 0;
  std::size_t byte_end = 0;
  std::string surface;

  // tokens layer
  bool is_abbreviation = false;
  std::optional<PatternKind> pattern_kind;

  // core annotation layers, absent until the providing annotator runs
  std::optional<std::string> pos;
  std::optional<std::string> lemma;
  std::optional<std::vector<MorphAnalysis>> morph;

  // open layers for plugin annotators: layer name -> value
  std::map<std::string, std::string, std::less<>> extra;

  friend bool operator==(const Token&, const Token&) = default;
};

// Inclusive range of token indices.
struct SentenceSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

class Document {
 public:
  Document() = default;
  explicit Document(std::string text) : text_(std::move(text)) {}

  const std::string& text() const { return text_; }

  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;
  std::map<std::string, std::string> meta;

  // Layers that currently hold data: "tokens", "sentences", "pos", "morph",
  // "lemma" and any plugin layer present on some token.
  std::set<std::string> populated_layers() const;

  // Removes a layer (used to undo a failed annotator).
  void clear_layer(std::string_view name);

  // Returns a description of the first violated invariant, if any.
  std::optional<std::string> validate() const;

  // Text of the tokens in a sentence.
  std::vector<std::string_view> sentence_surfaces(const SentenceSpan& s) const;

  friend bool operator==(const Document&, const Document&) = default;

 private:
  std::string text_;
};

// Builds tokens from pre-split words joined by single spaces and one sentence
// per input list. Used when gold token boundaries are given.
Document make_pretokenized(const std::vector<std::vector<std::string>>& sentences);

}  // namespace tint
