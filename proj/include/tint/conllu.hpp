#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tint/document.hpp"
#include "tint/pos_tagger.hpp"

namespace tint {

// One 10-column line; "_" marks an empty field.
struct ConlluRow {
  std::array<std::string, 10> columns;

  const std::string& id() const { return columns[0]; }
  const std::string& form() const { return columns[1]; }
  const std::string& lemma() const { return columns[2]; }
  const std::string& upos() const { return columns[3]; }

  // "4-5": a multiword token spanning the following word rows.
  bool is_range() const { return id().find('-') != std::string::npos; }
  // "8.1": an empty node of the enhanced graph.
  bool is_empty_node() const { return id().find('.') != std::string::npos; }
  bool is_word() const { return !is_range() && !is_empty_node(); }

  friend bool operator==(const ConlluRow&, const ConlluRow&) = default;
};

struct ConlluSentence {
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<ConlluRow> rows;

  // Word rows only (no ranges, no empty nodes).
  std::vector<const ConlluRow*> words() const;
  std::size_t word_count() const;
  // Value of a "# text = ..." comment.
  std::optional<std::string> text() const;

  friend bool operator==(const ConlluSentence&, const ConlluSentence&) = default;
};

// Throws ParseError(line, reason) on the first malformed line.
std::vector<ConlluSentence> read_conllu(std::string_view text);
std::vector<ConlluSentence> read_conllu_file(const std::filesystem::path& path);

std::string render_conllu(const std::vector<ConlluSentence>& sentences);

// Word forms and UPOS tags per sentence, for tagger training.
std::vector<TaggedSentence> tagged_sentences(const std::vector<ConlluSentence>& sentences);

// Word forms per sentence.
std::vector<std::vector<std::string>> sentence_words(const std::vector<ConlluSentence>& sentences);

// 10-column rows: index in sentence, surface, lemma, UPOS, then "_".
std::string write_conll(const Document& doc);

// Single JSON object: text, sentences, tokens (see docs/document.schema.json).
std::string write_json(const Document& doc);

}  // namespace tint
