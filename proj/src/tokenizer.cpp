#include "tint/tokenizer.hpp"

#include <algorithm>

#include "tint/error.hpp"
#include "tint/resources.hpp"
#include "tint/utf8.hpp"

namespace tint {

namespace {

constexpr std::size_t kMaxMergeRun = 32;

bool has_letter(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    const auto [cp, len] = utf8::decode(s, i);
    if (utf8::is_alpha(cp)) return true;
    i += len;
  }
  return false;
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

bool is_terminator(std::string_view s) {
  return s == "." || s == "!" || s == "?" || s == "…";
}

bool ends_with_terminator(std::string_view s) {
  return s.ends_with(".") || s.ends_with("!") || s.ends_with("?") || s.ends_with("…");
}

bool is_closer(std::string_view s) {
  return s == "\"" || s == ")" || s == "]" || s == "}" || s == "'" || s == "»" ||
         s == "”" || s == "’";
}

}  // namespace

// ---------------------------------------------------------------------------
// AbbreviationList

AbbreviationList AbbreviationList::parse(std::string_view text, bool case_sensitive) {
  AbbreviationList list(case_sensitive);
  for (const auto& row : resources::rows(text)) {
    const auto entry = trim(row.fields[0]);
    if (entry.empty()) continue;
    if (entry.back() != '.' || !has_letter(entry)) {
      throw ResourceLoadError("abbreviation list line " + std::to_string(row.line) +
                              ": entry must contain a letter and end with '.': " + entry);
    }
    list.add(entry);
  }
  return list;
}

void AbbreviationList::add(std::string_view entry) {
  entries_.emplace(entry);
  keys_.insert(case_sensitive_ ? std::string(entry) : utf8::to_lower(entry));
  max_bytes_ = std::max(max_bytes_, entry.size());
}

void AbbreviationList::merge(const AbbreviationList& other) {
  for (const auto& e : other.entries()) add(e);
}

bool AbbreviationList::contains(std::string_view s) const {
  if (s.size() > max_bytes_ || s.empty() || s.back() != '.') return false;
  if (case_sensitive_) return keys_.find(s) != keys_.end();
  return keys_.find(utf8::to_lower(s)) != keys_.end();
}

// ---------------------------------------------------------------------------
// PatternSet

PatternSet PatternSet::parse(std::string_view text) {
  PatternSet set;
  for (const auto& row : resources::rows(text)) {
    if (row.fields.size() != 2) {
      throw ResourceLoadError("pattern file line " + std::to_string(row.line) +
                              ": expected kind<TAB>regex");
    }
    const auto kind = parse_pattern_kind(row.fields[0]);
    if (!kind) {
      throw ResourceLoadError("pattern file line " + std::to_string(row.line) +
                              ": unknown kind " + std::string(row.fields[0]));
    }
    try {
      set.add(*kind, std::string(row.fields[1]));
    } catch (const std::regex_error& e) {
      throw ResourceLoadError("pattern file line " + std::to_string(row.line) +
                              ": bad regex: " + e.what());
    }
  }
  return set;
}

void PatternSet::add(PatternKind kind, const std::string& source) {
  patterns_.push_back({kind, source, std::regex(source, std::regex::ECMAScript | std::regex::optimize)});
}

std::optional<PatternKind> PatternSet::match(std::string_view s) const {
  for (const auto& p : patterns_) {
    if (std::regex_match(s.begin(), s.end(), p.re)) return p.kind;
  }
  return std::nullopt;
}

void PatternSet::disable(PatternKind kind) {
  std::erase_if(patterns_, [kind](const Entry& e) { return e.kind == kind; });
}

// ---------------------------------------------------------------------------
// passes

std::vector<ProtoToken> gross_tokenize(std::string_view text) {
  std::vector<ProtoToken> out;
  out.reserve(text.size() / 5 + 1);
  bool in_word = false;
  ProtoToken cur{};
  char32_t prev = 0;
  std::size_t chars = 0;
  for (std::size_t i = 0; i < text.size();) {
    const auto [cp, len] = utf8::decode(text, i);
    if (utf8::is_space(cp)) {
      if (in_word) out.push_back(cur);
      in_word = false;
    } else if (utf8::is_punct(cp)) {
      bool elision = false;
      if (in_word && is_apostrophe(cp) && utf8::is_alpha(prev) && i + len < text.size()) {
        elision = utf8::is_alpha(utf8::decode(text, i + len).cp);
      }
      if (elision) {
        cur.end = chars + 1;
        cur.byte_end = i + len;
        out.push_back(cur);
      } else {
        if (in_word) out.push_back(cur);
        out.push_back({chars, chars + 1, i, i + len});
      }
      in_word = false;
    } else if (in_word) {
      cur.end = chars + 1;
      cur.byte_end = i + len;
    } else {
      cur = {chars, chars + 1, i, i + len};
      in_word = true;
    }
    prev = cp;
    i += len;
    ++chars;
  }
  if (in_word) out.push_back(cur);
  return out;
}

namespace {

bool has_digit(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Token make_token(const ProtoToken& first, const ProtoToken& last, std::string_view text) {
  Token t;
  t.begin = first.begin;
  t.end = last.end;
  t.byte_begin = first.byte_begin;
  t.byte_end = last.byte_end;
  t.surface = std::string(text.substr(t.byte_begin, t.byte_end - t.byte_begin));
  return t;
}

}  // namespace

std::vector<Token> merge_tokens(const std::vector<ProtoToken>& proto, std::string_view text,
                                const AbbreviationList& abbrevs, const PatternSet& patterns) {
  std::vector<Token> out;
  out.reserve(proto.size());
  auto slice = [&](std::size_t a, std::size_t b) {
    return text.substr(proto[a].byte_begin, proto[b - 1].byte_end - proto[a].byte_begin);
  };
  auto emit = [&](std::size_t a, std::size_t b, bool abbrev, std::optional<PatternKind> kind) {
    Token t = make_token(proto[a], proto[b - 1], text);
    t.index = out.size();
    t.is_abbreviation = abbrev;
    t.pattern_kind = kind;
    out.push_back(std::move(t));
  };

  std::size_t chunk_begin = 0;
  while (chunk_begin < proto.size()) {
    // a chunk is a maximal run of protos with no whitespace in between
    std::size_t chunk_end = chunk_begin + 1;
    while (chunk_end < proto.size() && proto[chunk_end].byte_begin == proto[chunk_end - 1].byte_end) {
      ++chunk_end;
    }

    if (chunk_end - chunk_begin == 1) {
      const auto s = slice(chunk_begin, chunk_end);
      emit(chunk_begin, chunk_end, false, has_digit(s) ? patterns.match(s) : std::nullopt);
      chunk_begin = chunk_end;
      continue;
    }

    const auto whole = slice(chunk_begin, chunk_end);
    if (auto kind = patterns.match(whole)) {
      emit(chunk_begin, chunk_end, false, kind);
      chunk_begin = chunk_end;
      continue;
    }

    std::size_t i = chunk_begin;
    while (i < chunk_end) {
      bool merged = false;
      const std::size_t longest = std::min(chunk_end, i + kMaxMergeRun);
      for (std::size_t j = longest; j >= i + 2; --j) {
        const auto s = slice(i, j);
        if (abbrevs.contains(s)) {
          emit(i, j, true, std::nullopt);
          i = j;
          merged = true;
          break;
        }
        if (i == chunk_begin && j == chunk_end) continue;  // already tried
        if (auto kind = patterns.match(s)) {
          emit(i, j, false, kind);
          i = j;
          merged = true;
          break;
        }
      }
      if (!merged) {
        const auto s = slice(i, i + 1);
        emit(i, i + 1, false, has_digit(s) ? patterns.match(s) : std::nullopt);
        ++i;
      }
    }
    chunk_begin = chunk_end;
  }
  return out;
}

std::vector<SentenceSpan> split_sentences(const std::vector<Token>& tokens, std::string_view /*text*/,
                                          const AbbreviationList& /*abbrevs*/) {
  std::vector<SentenceSpan> out;
  std::size_t first = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& t = tokens[i];
    if (!t.is_abbreviation && (is_terminator(t.surface) || ends_with_terminator(t.surface))) {
      std::size_t last = i;
      while (last + 1 < tokens.size() &&
             (is_terminator(tokens[last + 1].surface) || is_closer(tokens[last + 1].surface))) {
        ++last;
      }
      out.push_back({first, last});
      first = last + 1;
      i = last + 1;
    } else {
      ++i;
    }
  }
  if (first < tokens.size()) out.push_back({first, tokens.size() - 1});
  return out;
}

// ---------------------------------------------------------------------------
// Tokenizer

Tokenizer Tokenizer::defaults() { return from_properties(Properties()); }

Tokenizer Tokenizer::from_properties(const Properties& props) {
  const bool case_sensitive = props.get_bool("abbrevCaseSensitive", false);
  AbbreviationList abbrevs(case_sensitive);
  const auto files = props.get_paths("abbrevFile");
  if (files.empty()) {
    abbrevs.merge(AbbreviationList::parse(resources::embedded("abbreviations.txt"), case_sensitive));
    abbrevs.merge(
        AbbreviationList::parse(resources::embedded("abbreviations-acronyms.txt"), case_sensitive));
  } else {
    for (const auto& f : files) abbrevs.merge(AbbreviationList::parse(read_file(f), case_sensitive));
  }
  auto patterns = PatternSet::parse(resources::load(props.get_path("patternFile"), "patterns.tsv"));
  for (const auto& name : props.get_list("disablePatterns")) {
    auto kind = parse_pattern_kind(name);
    if (!kind) throw ResourceLoadError("disablePatterns: unknown pattern kind " + name);
    patterns.disable(*kind);
  }
  return Tokenizer(std::move(abbrevs), std::move(patterns));
}

std::pair<std::vector<Token>, std::vector<SentenceSpan>> Tokenizer::tokenize(std::string_view text) const {
  auto tokens = merge_tokens(gross_tokenize(text), text, abbrevs_, patterns_);
  auto sentences = split_sentences(tokens, text, abbrevs_);
  return {std::move(tokens), std::move(sentences)};
}

void Tokenizer::annotate(Document& doc) const {
  auto [tokens, sentences] = tokenize(doc.text());
  doc.tokens = std::move(tokens);
  doc.sentences = std::move(sentences);
}

namespace {

class TokenizeAnnotator final : public Annotator {
 public:
  explicit TokenizeAnnotator(Tokenizer tokenizer) : tokenizer_(std::move(tokenizer)) {}
  void annotate(Document& doc) const override { tokenizer_.annotate(doc); }

 private:
  Tokenizer tokenizer_;
};

}  // namespace

AnnotatorSpec tokenize_spec() {
  return {"tokenize", {std::string(layer::text)},
          {std::string(layer::tokens), std::string(layer::sentences)}};
}

std::unique_ptr<Annotator> make_tokenize_annotator(const Properties& props) {
  return std::make_unique<TokenizeAnnotator>(Tokenizer::from_properties(props));
}

}  // namespace tint
