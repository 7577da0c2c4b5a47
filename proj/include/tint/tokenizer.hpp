#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tint/document.hpp"
#include "tint/pipeline.hpp"

namespace tint {

// Non-breaking abbreviations such as "dott." or "S.p.A.". Every entry holds
// at least one letter and ends with '.'.
class AbbreviationList {
 public:
  explicit AbbreviationList(bool case_sensitive = false) : case_sensitive_(case_sensitive) {}

  // One entry per line, '#' comments. Throws ResourceLoadError on an
  // invalid entry.
  static AbbreviationList parse(std::string_view text, bool case_sensitive = false);

  void add(std::string_view entry);
  void merge(const AbbreviationList& other);
  bool contains(std::string_view s) const;

  bool case_sensitive() const { return case_sensitive_; }
  const std::set<std::string, std::less<>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  bool case_sensitive_;
  std::size_t max_bytes_ = 0;
  std::set<std::string, std::less<>> entries_;  // raw entries as given
  std::set<std::string, std::less<>> keys_;     // lowercased unless case-sensitive
};

// Ordered (kind, regex) list; the first full match wins.
class PatternSet {
 public:
  // Lines of `kind<TAB>regex`. Throws ResourceLoadError on unknown kinds or
  // regexes that do not compile.
  static PatternSet parse(std::string_view text);

  void add(PatternKind kind, const std::string& source);
  std::optional<PatternKind> match(std::string_view s) const;
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }
  // Drops every pattern of the given kind.
  void disable(PatternKind kind);

 private:
  struct Entry {
    PatternKind kind;
    std::string source;
    std::regex re;
  };
  std::vector<Entry> patterns_;
};

// Span produced by the gross pass, in both character and byte offsets.
struct ProtoToken {
  std::size_t begin;
  std::size_t end;
  std::size_t byte_begin;
  std::size_t byte_end;

  friend bool operator==(const ProtoToken&, const ProtoToken&) = default;
};

// Splits on whitespace and detaches every punctuation character. The only
// exception is an apostrophe between two letters, which stays on the left
// word ("l'acqua" -> "l'" "acqua"), following Italian elision.
std::vector<ProtoToken> gross_tokenize(std::string_view text);

// Merges adjacent proto-token runs that form an abbreviation or match a
// pattern (longest run wins); everything else passes through.
std::vector<Token> merge_tokens(const std::vector<ProtoToken>& proto, std::string_view text,
                                const AbbreviationList& abbrevs, const PatternSet& patterns);

// Sentence boundary after a token ending in . ! ? or … unless the token is an
// abbreviation. Terminator runs and closing quotes/brackets that follow stay
// with the sentence they close.
std::vector<SentenceSpan> split_sentences(const std::vector<Token>& tokens, std::string_view text,
                                          const AbbreviationList& abbrevs);

class Tokenizer {
 public:
  Tokenizer(AbbreviationList abbrevs, PatternSet patterns)
      : abbrevs_(std::move(abbrevs)), patterns_(std::move(patterns)) {}

  // Bundled Italian lists and patterns.
  static Tokenizer defaults();

  // Keys: abbrevFile (comma-separated list of files), abbrevCaseSensitive,
  // patternFile, disablePatterns (comma-separated kinds).
  static Tokenizer from_properties(const Properties& props);

  std::pair<std::vector<Token>, std::vector<SentenceSpan>> tokenize(std::string_view text) const;
  void annotate(Document& doc) const;

  const AbbreviationList& abbreviations() const { return abbrevs_; }
  const PatternSet& patterns() const { return patterns_; }

 private:
  AbbreviationList abbrevs_;
  PatternSet patterns_;
};

AnnotatorSpec tokenize_spec();
std::unique_ptr<Annotator> make_tokenize_annotator(const Properties& props);

}  // namespace tint
