#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tint/conllu.hpp"
#include "tint/document.hpp"

namespace tint {

// Character interval [begin, end) in Unicode scalar values.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

enum class AlignKind { exact, merged, split, mismatched };

std::string_view to_string(AlignKind kind);

// A connected set of overlapping tokens. merged: one system token covers
// several gold tokens; split: several system tokens cover one gold token.
struct AlignGroup {
  std::vector<std::size_t> system;
  std::vector<std::size_t> gold;
  AlignKind kind = AlignKind::mismatched;
  friend bool operator==(const AlignGroup&, const AlignGroup&) = default;
};

struct Alignment {
  std::vector<AlignGroup> groups;
  std::size_t exact = 0;
  std::size_t merged = 0;
  std::size_t split = 0;
  std::size_t mismatched = 0;

  // Group members zipped side by side, nullopt marking a gap.
  std::vector<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> pairs() const;
};

// Groups tokens whose spans overlap. Each side must be sorted, non-empty
// and non-overlapping, and lie within [0, text_length]; otherwise
// OffsetDomainError.
Alignment align_tokens(const std::vector<Span>& system, const std::vector<Span>& gold, std::size_t text_length);

std::vector<Span> token_spans(const Document& doc);

enum class EvalMode {
  gold_tokens,  // system input built from the gold word forms
  raw_text,     // system tokenizes the "# text" of every sentence
};

// Document the system should annotate for a gold file. In gold_tokens mode
// it already carries tokens and sentences.
Document evaluation_input(const std::vector<ConlluSentence>& gold, EvalMode mode);

struct EvalResult {
  std::size_t tokens = 0;  // gold words
  std::size_t correct = 0;
  double accuracy() const { return tokens == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(tokens); }
};

using CoarseMap = char (*)(std::string_view);

// A gold word counts as correct only if its token is exactly aligned to a
// system token and the coarse classes agree. Throws EmptyGold.
EvalResult eval_pos(const Document& system, const std::vector<ConlluSentence>& gold,
                    EvalMode mode = EvalMode::gold_tokens, CoarseMap map = coarse_map);

// As eval_pos on lemma strings. Case-sensitive, except that the first word
// of a sentence is compared lowercased unless gold tags it PROPN.
EvalResult eval_lemma(const Document& system, const std::vector<ConlluSentence>& gold,
                      EvalMode mode = EvalMode::gold_tokens);

}  // namespace tint
