#include "tint/eval.hpp"

#include <algorithm>

#include "tint/error.hpp"
#include "tint/pos_tagger.hpp"
#include "tint/utf8.hpp"

namespace tint {

std::string_view to_string(AlignKind kind) {
  switch (kind) {
    case AlignKind::exact:
      return "exact";
    case AlignKind::merged:
      return "merged";
    case AlignKind::split:
      return "split";
    case AlignKind::mismatched:
      return "mismatched";
  }
  return "";
}

std::vector<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> Alignment::pairs() const {
  std::vector<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> out;
  for (const auto& g : groups) {
    const auto n = std::max(g.system.size(), g.gold.size());
    for (std::size_t k = 0; k < n; ++k) {
      out.emplace_back(k < g.system.size() ? std::optional(g.system[k]) : std::nullopt,
                       k < g.gold.size() ? std::optional(g.gold[k]) : std::nullopt);
    }
  }
  return out;
}

namespace {

void check_side(const std::vector<Span>& spans, std::size_t text_length, const char* side) {
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const auto& s = spans[i];
    const std::string where = std::string(side) + " token " + std::to_string(i);
    if (s.end > text_length) throw OffsetDomainError(where + " ends past the text");
    if (s.begin >= s.end) throw OffsetDomainError(where + " has an empty span");
    if (s.begin < prev_end) throw OffsetDomainError(where + " overlaps or precedes its predecessor");
    prev_end = s.end;
  }
}

AlignKind classify(const AlignGroup& g, const std::vector<Span>& system, const std::vector<Span>& gold) {
  if (g.system.empty() || g.gold.empty()) return AlignKind::mismatched;
  const bool same_extent = system[g.system.front()].begin == gold[g.gold.front()].begin &&
                           system[g.system.back()].end == gold[g.gold.back()].end;
  if (!same_extent) return AlignKind::mismatched;
  if (g.system.size() == 1 && g.gold.size() == 1) return AlignKind::exact;
  if (g.system.size() == 1) return AlignKind::merged;
  if (g.gold.size() == 1) return AlignKind::split;
  return AlignKind::mismatched;
}

}  // namespace

Alignment align_tokens(const std::vector<Span>& system, const std::vector<Span>& gold, std::size_t text_length) {
  check_side(system, text_length, "system");
  check_side(gold, text_length, "gold");
  Alignment out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < system.size() || j < gold.size()) {
    AlignGroup g;
    std::size_t extent;
    if (j >= gold.size() || (i < system.size() && system[i].begin <= gold[j].begin)) {
      extent = system[i].end;
      g.system.push_back(i++);
    } else {
      extent = gold[j].end;
      g.gold.push_back(j++);
    }
    for (bool grew = true; grew;) {
      grew = false;
      if (i < system.size() && system[i].begin < extent) {
        extent = std::max(extent, system[i].end);
        g.system.push_back(i++);
        grew = true;
      }
      if (j < gold.size() && gold[j].begin < extent) {
        extent = std::max(extent, gold[j].end);
        g.gold.push_back(j++);
        grew = true;
      }
    }
    g.kind = classify(g, system, gold);
    switch (g.kind) {
      case AlignKind::exact:
        ++out.exact;
        break;
      case AlignKind::merged:
        ++out.merged;
        break;
      case AlignKind::split:
        ++out.split;
        break;
      case AlignKind::mismatched:
        ++out.mismatched;
        break;
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

std::vector<Span> token_spans(const Document& doc) {
  std::vector<Span> out;
  out.reserve(doc.tokens.size());
  for (const auto& t : doc.tokens) out.push_back({t.begin, t.end});
  return out;
}

namespace {

struct GoldWord {
  std::size_t token;  // index into GoldLayout::spans
  bool multiword;
  bool sentence_initial;
  const ConlluRow* row;
};

struct GoldLayout {
  std::string text;
  std::vector<Span> spans;
  std::vector<GoldWord> words;
};

bool space_after(const ConlluRow& r) { return r.columns[9].find("SpaceAfter=No") == std::string::npos; }

// Surface tokens of one sentence: multiword ranges stand for their words.
struct Surface {
  std::string form;
  std::vector<const ConlluRow*> words;
  bool multiword;
  bool space_after;
};

std::vector<Surface> surfaces(const ConlluSentence& s) {
  std::vector<Surface> out;
  std::size_t covered_until = 0;
  for (const auto& r : s.rows) {
    if (r.is_empty_node()) continue;
    if (r.is_range()) {
      const auto dash = r.id().find('-');
      covered_until = std::stoul(r.id().substr(dash + 1));
      out.push_back({r.form(), {}, true, space_after(r)});
      continue;
    }
    if (std::stoul(r.id()) <= covered_until) {
      out.back().words.push_back(&r);
      continue;
    }
    out.push_back({r.form(), {&r}, false, space_after(r)});
  }
  return out;
}

GoldLayout gold_layout(const std::vector<ConlluSentence>& gold, EvalMode mode) {
  GoldLayout layout;
  if (mode == EvalMode::gold_tokens) {
    const Document doc = make_pretokenized(sentence_words(gold));
    layout.text = doc.text();
    layout.spans = token_spans(doc);
    std::size_t k = 0;
    for (const auto& s : gold) {
      bool first = true;
      for (const auto* r : s.words()) {
        if (r->form().empty()) continue;
        layout.words.push_back({k++, false, first, r});
        first = false;
      }
    }
    return layout;
  }

  std::size_t chars = 0;
  for (const auto& s : gold) {
    const auto surf = surfaces(s);
    if (surf.empty()) continue;
    std::string sentence_text;
    if (const auto t = s.text()) {
      sentence_text = *t;
    } else {
      for (const auto& x : surf) sentence_text.append(x.form).append(x.space_after ? " " : "");
    }
    if (!layout.text.empty()) {
      layout.text.push_back('\n');
      ++chars;
    }
    const std::size_t base_bytes = layout.text.size();
    layout.text += sentence_text;

    std::size_t cursor = 0;
    std::size_t cursor_chars = chars;
    bool first = true;
    for (const auto& x : surf) {
      const auto at = sentence_text.find(x.form, cursor);
      if (at == std::string::npos) {
        throw Error("gold token '" + x.form + "' not found in sentence text: " + sentence_text);
      }
      cursor_chars += utf8::length(std::string_view(sentence_text).substr(cursor, at - cursor));
      const std::size_t begin = cursor_chars;
      cursor_chars += utf8::length(x.form);
      cursor = at + x.form.size();
      layout.spans.push_back({begin, cursor_chars});
      for (const auto* w : x.words) {
        layout.words.push_back({layout.spans.size() - 1, x.multiword, first, w});
        first = false;
      }
    }
    chars += utf8::length(std::string_view(layout.text).substr(base_bytes));
  }
  return layout;
}

template <typename Compare>
EvalResult score(const Document& system, const std::vector<ConlluSentence>& gold, EvalMode mode, Compare correct) {
  const auto layout = gold_layout(gold, mode);
  if (layout.words.empty()) throw EmptyGold();
  if (system.text() != layout.text) throw Error("system document text differs from the gold text");
  const auto sys_spans = token_spans(system);
  const auto alignment = align_tokens(sys_spans, layout.spans, utf8::length(layout.text));

  std::vector<std::optional<std::size_t>> exact(layout.spans.size());
  for (const auto& g : alignment.groups) {
    if (g.kind == AlignKind::exact) exact[g.gold.front()] = g.system.front();
  }
  EvalResult result;
  result.tokens = layout.words.size();
  for (const auto& w : layout.words) {
    if (w.multiword || !exact[w.token]) continue;
    result.correct += correct(system.tokens[*exact[w.token]], w);
  }
  return result;
}

}  // namespace

Document evaluation_input(const std::vector<ConlluSentence>& gold, EvalMode mode) {
  if (mode == EvalMode::gold_tokens) return make_pretokenized(sentence_words(gold));
  return Document(gold_layout(gold, mode).text);
}

EvalResult eval_pos(const Document& system, const std::vector<ConlluSentence>& gold, EvalMode mode, CoarseMap map) {
  return score(system, gold, mode, [&](const Token& t, const GoldWord& w) {
    return t.pos && map(*t.pos) == map(w.row->upos());
  });
}

EvalResult eval_lemma(const Document& system, const std::vector<ConlluSentence>& gold, EvalMode mode) {
  return score(system, gold, mode, [&](const Token& t, const GoldWord& w) {
    if (!t.lemma) return false;
    if (w.sentence_initial && w.row->upos() != "PROPN") return utf8::to_lower(*t.lemma) == utf8::to_lower(w.row->lemma());
    return *t.lemma == w.row->lemma();
  });
}

}  // namespace tint
