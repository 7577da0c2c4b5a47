#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "support.hpp"
#include "tint/conllu.hpp"
#include "tint/eval.hpp"
#include "tint/lemmatizer.hpp"
#include "tint/morphology.hpp"
#include "tint/tokenizer.hpp"
#include "tint/utf8.hpp"

namespace tint::testing {

namespace {

CheckResult fail(std::string detail) { return {false, std::move(detail)}; }

// Scalar count of the first `bytes` bytes of a valid UTF-8 string.
std::size_t chars_before(std::string_view s, std::size_t bytes) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < bytes; ++i) n += (static_cast<unsigned char>(s[i]) & 0xC0) != 0x80;
  return n;
}

// Whitespace characters random_text() can produce.
bool is_gap_char(char32_t c) { return c == U' ' || c == U'\n' || c == U'\t' || c == 0xA0 || c == 0x2009; }

bool all_gap(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    const auto d = utf8::decode(s, i);
    if (!is_gap_char(d.cp)) return false;
    i += d.length;
  }
  return true;
}

bool any_gap(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    const auto d = utf8::decode(s, i);
    if (is_gap_char(d.cp)) return true;
    i += d.length;
  }
  return false;
}

std::string shown(std::string_view s) {
  std::ostringstream out;
  out << '"';
  for (char c : s) {
    if (c == '\n') {
      out << "\\n";
    } else if (c == '\t') {
      out << "\\t";
    } else {
      out << c;
    }
  }
  out << '"';
  return out.str();
}

}  // namespace

CheckResult check_tokenizer_lossless(std::size_t samples, std::uint64_t seed) {
  const auto tokenizer = Tokenizer::defaults();
  std::mt19937_64 rng(seed);
  std::size_t total_tokens = 0;
  for (std::size_t n = 0; n < samples; ++n) {
    const std::string text = random_text(rng, 120);
    const auto [tokens, sentences] = tokenizer.tokenize(text);
    std::string rebuilt;
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const auto& t = tokens[i];
      const auto where = "sample " + std::to_string(n) + " " + shown(text) + " token " + std::to_string(i);
      if (t.index != i) return fail(where + ": index");
      if (t.byte_begin < cursor || t.byte_end <= t.byte_begin || t.byte_end > text.size())
        return fail(where + ": byte span out of order");
      const auto slice = std::string_view(text).substr(t.byte_begin, t.byte_end - t.byte_begin);
      if (slice != t.surface) return fail(where + ": surface " + shown(t.surface) + " != slice " + shown(slice));
      if (t.begin != chars_before(text, t.byte_begin) || t.end != chars_before(text, t.byte_end))
        return fail(where + ": character offsets");
      const auto gap = std::string_view(text).substr(cursor, t.byte_begin - cursor);
      if (!all_gap(gap)) return fail(where + ": non-whitespace gap " + shown(gap));
      if (any_gap(t.surface)) return fail(where + ": whitespace inside " + shown(t.surface));
      rebuilt.append(gap).append(t.surface);
      cursor = t.byte_end;
    }
    const auto tail = std::string_view(text).substr(cursor);
    if (!all_gap(tail)) return fail("sample " + std::to_string(n) + " " + shown(text) + ": text after last token");
    rebuilt.append(tail);
    if (rebuilt != text) return fail("sample " + std::to_string(n) + ": reconstruction differs");
    std::size_t next = 0;
    for (const auto& s : sentences) {
      if (s.first != next || s.last < s.first) return fail("sample " + std::to_string(n) + ": sentence partition");
      next = s.last + 1;
    }
    if (next != tokens.size()) return fail("sample " + std::to_string(n) + ": sentences miss tokens");
    total_tokens += tokens.size();
  }
  return {true, std::to_string(samples) + " samples, " + std::to_string(total_tokens) + " tokens, all lossless"};
}

CheckResult check_abbreviation_suppression() {
  const auto tokenizer = Tokenizer::defaults();
  std::size_t checked = 0;
  for (const auto& entry : tokenizer.abbreviations().entries()) {
    const std::string text = "Ecco " + entry + " qui.";
    const auto [tokens, sentences] = tokenizer.tokenize(text);
    if (sentences.size() != 1) {
      return fail(shown(text) + " gives " + std::to_string(sentences.size()) + " sentences");
    }
    if (tokens.size() != 4 || tokens[1].surface != entry || !tokens[1].is_abbreviation) {
      return fail(shown(text) + " does not keep " + shown(entry) + " as one abbreviation token");
    }
    ++checked;
  }
  if (checked == 0) return fail("abbreviation list is empty");
  return {true, std::to_string(checked) + " shipped entries, each kept whole inside one sentence"};
}

namespace {

struct TagCase {
  const char* tag;
  const char* category;
  FeatureMap features;
};

const std::vector<TagCase>& tag_cases() {
  static const std::vector<TagCase> cases = {
      {"NOUN-M:s", "noun", {{"gender", "m"}, {"number", "s"}}},
      {"NOUN-F:p", "noun", {{"gender", "f"}, {"number", "p"}}},
      {"VER:ind+pres+3+s", "verb", {{"mood", "ind"}, {"tense", "pres"}, {"person", "3"}, {"number", "s"}}},
      {"VER:inf+pres", "verb", {{"mood", "inf"}, {"tense", "pres"}}},
      {"ADJ:pos+f+s", "adjective", {{"degree", "pos"}, {"gender", "f"}, {"number", "s"}}},
      {"ADV", "adverb", {}},
      {"ART-M:p", "determiner", {{"gender", "m"}, {"number", "p"}}},
      {"CON", "other", {}},
      {"QQQ", "other", {}},
  };
  return cases;
}

std::string random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  static const std::vector<char32_t> letters = {'a', 'b', 'c', 'e', 'i', 'l', 'm', 'n', 'o', 'r',
                                                's', 't', 'u', 'z', 'A', 'Q', U'à', U'è', U'ò', U'ß'};
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::string out;
  for (auto n = len(rng); n > 0; --n) utf8::append(out, letters[pick(rng)]);
  return out;
}

}  // namespace

CheckResult check_lexicon_round_trip(std::size_t entries, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<std::string, std::vector<MorphAnalysis>> expected;
  std::string tsv;
  std::uniform_int_distribution<std::size_t> tag_pick(0, tag_cases().size() - 1);
  std::size_t lines = 0;
  while (expected.size() < entries) {
    const auto form = random_word(rng, 1, 12);
    const auto analyses = 1 + rng() % 3;
    for (std::size_t a = 0; a < analyses; ++a) {
      const auto& tc = tag_cases()[tag_pick(rng)];
      MorphAnalysis m{random_word(rng, 1, 10), tc.category, tc.features, nullptr};
      auto& list = expected[form];
      if (std::find(list.begin(), list.end(), m) == list.end()) list.push_back(m);
      tsv += form + "\t" + m.lemma + "\t" + tc.tag + "\n";
      ++lines;
    }
  }
  TempDir dir;
  std::uint32_t block_size = 1024;
  const auto path = dir / "random.mlex";
  const auto report = compile_lexicon(tsv, path, TagTable::defaults(), block_size);
  if (!report.malformed.empty()) return fail("generated line reported malformed: " + std::to_string(report.malformed.front().line));
  const auto store = LexiconStore::open(path);
  if (store.size() != expected.size()) {
    return fail("store holds " + std::to_string(store.size()) + " keys, expected " + std::to_string(expected.size()));
  }
  const auto blocks = store.header().block_count;
  const auto bound = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(std::max<std::uint32_t>(blocks, 1))))) + 1;
  std::size_t max_probes = 0;
  for (const auto& [form, analyses] : expected) {
    std::size_t probes = 0;
    if (store.find(form, &probes) != analyses) return fail("lookup(" + shown(form) + ") differs from compiled analyses");
    max_probes = std::max(max_probes, probes);
    if (probes > bound) return fail("lookup(" + shown(form) + ") used " + std::to_string(probes) + " probes, bound " + std::to_string(bound));
  }
  for (int k = 0; k < 200; ++k) {
    const auto absent = random_word(rng, 13, 16);
    if (!expected.contains(absent) && !store.find(absent).empty()) return fail("phantom hit for " + shown(absent));
  }
  std::string prev;
  bool first = true;
  bool sorted = true;
  std::size_t visited = 0;
  store.for_each([&](std::string_view key, const std::vector<MorphAnalysis>&) {
    if (!first && !(prev < key)) sorted = false;
    prev = std::string(key);
    first = false;
    ++visited;
  });
  if (!sorted) return fail("store keys not strictly increasing");
  if (visited != expected.size()) return fail("iteration visited " + std::to_string(visited) + " keys");
  return {true, std::to_string(expected.size()) + " keys from " + std::to_string(lines) + " lines, " +
                    std::to_string(blocks) + " blocks, max probes " + std::to_string(max_probes) + " <= " +
                    std::to_string(bound)};
}

CheckResult check_decomposition_cases() {
  TempDir dir;
  const auto store = LexiconStore::open(compile_store(dir, fixture_lexicon()));
  const auto affixes = AffixTable::defaults();
  struct Case {
    std::string surface;
    std::optional<std::string> prefix;
    std::string root;
    std::vector<std::string> infixes;
    std::optional<std::string> suffix;
    std::string category;
  };
  const std::vector<Case> cases = {
      {"portarglielo", std::nullopt, "portare", {"glie"}, "lo", "verb"},
      {"portacene", std::nullopt, "porta", {"ce"}, "ne", "verb"},
      {"bidirezionale", "bi", "direzionale", {}, std::nullopt, "adjective"},
  };
  std::string summary;
  for (const auto& c : cases) {
    const auto found = decompose(store, c.surface, affixes);
    if (found.empty()) return fail(c.surface + ": no decomposition");
    for (const auto& d : found) {
      if (d.reconstruct() != c.surface) return fail(c.surface + ": decomposition does not reconstruct the surface");
      if (store.find(d.root).empty()) return fail(c.surface + ": root " + d.root + " not in the store");
    }
    const auto& best = found.front();
    if (best.prefix != c.prefix || best.root != c.root || best.infixes != c.infixes || best.suffix != c.suffix ||
        best.root_analysis.category != c.category) {
      return fail(c.surface + ": best decomposition has root " + best.root + " (" + best.root_analysis.category + ")");
    }
    summary += (summary.empty() ? "" : ", ") + c.surface + " -> " + c.prefix.value_or("") + (c.prefix ? "+" : "") + c.root;
    for (const auto& i : c.infixes) summary += "+" + i;
    if (c.suffix) summary += "+" + *c.suffix;
  }
  return {true, summary};
}

CheckResult check_article_cases() {
  TempDir dir;
  auto store = std::make_shared<const LexiconStore>(LexiconStore::open(compile_store(dir, fixture_lexicon())));
  const MorphAnalyzer analyzer(store, AffixTable::defaults());
  const Lemmatizer lemmatizer;
  std::string summary;
  for (const auto& [article, lemma] : std::vector<std::pair<std::string, std::string>>{{"il", "latte"}, {"le", "latta"}}) {
    auto doc = make_pretokenized({{article, "latte"}});
    doc.tokens[0].pos = "DET";
    doc.tokens[1].pos = "NOUN";
    for (auto& t : doc.tokens) t.morph = analyzer.analyze(t.surface);
    if (doc.tokens[1].morph->size() != 2) return fail("fixture store does not hold both analyses of latte");
    const auto d = lemmatizer.lemmatize(doc.tokens, 1);
    if (d.lemma != lemma || d.source != LemmaSource::article_disambiguated) {
      return fail(article + " latte -> " + d.lemma + " (" + std::string(to_string(d.source)) + "), expected " + lemma);
    }
    summary += (summary.empty() ? "" : ", ") + article + " latte -> " + d.lemma;
  }
  return {true, summary};
}

namespace {

std::vector<TaggedSentence> toy_corpus() {
  const std::vector<std::pair<std::string, std::string>> lexicon = {
      {"il", "DET"},    {"la", "DET"},     {"un", "DET"},    {"cane", "NOUN"},  {"gatta", "NOUN"},
      {"casa", "NOUN"}, {"dorme", "VERB"}, {"corre", "VERB"}, {"mangia", "VERB"}, {"bianco", "ADJ"},
      {"piccola", "ADJ"}, {"molto", "ADV"}, {"spesso", "ADV"}, {".", "PUNCT"}, {"e", "CCONJ"}};
  const std::vector<std::vector<int>> shapes = {
      {0, 3, 6, 13},     {1, 4, 7, 13},     {2, 5, 11, 8, 13}, {0, 3, 9, 6, 12, 13}, {1, 4, 10, 7, 13},
      {2, 3, 8, 14, 6, 13}, {0, 5, 10, 6, 13}, {1, 3, 7, 11, 13}, {2, 4, 9, 8, 12, 13}, {0, 4, 6, 14, 7, 13}};
  std::vector<TaggedSentence> corpus;
  for (const auto& shape : shapes) {
    TaggedSentence s;
    for (int k : shape) {
      s.words.push_back(lexicon[k].first);
      s.tags.push_back(lexicon[k].second);
    }
    corpus.push_back(std::move(s));
  }
  return corpus;
}

}  // namespace

CheckResult check_tagger_sanity() {
  const auto corpus = toy_corpus();
  TrainOptions options;
  options.epochs = 5;
  options.seed = 11;
  const auto model = train(corpus, options);
  std::size_t right = 0;
  std::size_t total = 0;
  for (const auto& s : corpus) {
    const auto tags = tag_sentence(model, s.words);
    for (std::size_t i = 0; i < tags.size(); ++i) right += tags[i] == s.tags[i];
    total += s.words.size();
  }
  if (right != total) return fail("toy corpus training accuracy " + std::to_string(right) + "/" + std::to_string(total));

  TempDir dir;
  save_model(model, dir / "toy.posm");
  const auto loaded = load_model(dir / "toy.posm");
  if (!(loaded == model)) return fail("loaded model differs from saved model");
  if (serialize_model(loaded) != serialize_model(model)) return fail("re-serialized bytes differ");

  const auto again = train(corpus, options);
  if (serialize_model(again) != serialize_model(model)) return fail("same corpus and seed gave different model bytes");
  return {true, "toy corpus " + std::to_string(right) + "/" + std::to_string(total) +
                    " after 5 epochs; save/load bit-exact; seeded retrain bit-identical"};
}

namespace {

struct Vocab {
  const char* form;
  const char* lemma;
  const char* upos;
};

const std::vector<Vocab>& eval_vocab() {
  static const std::vector<Vocab> v = {
      {"il", "il", "DET"},       {"cane", "cane", "NOUN"},   {"Roma", "Roma", "PROPN"}, {"corre", "correre", "VERB"},
      {"è", "essere", "AUX"},    {"bello", "bello", "ADJ"},  {"molto", "molto", "ADV"}, {"e", "e", "CCONJ"},
      {"tre", "tre", "NUM"},     {"città", "città", "NOUN"}, {"l'", "il", "DET"},       {"S.p.A.", "S.p.A.", "PROPN"}};
  return v;
}

const std::vector<std::pair<const char*, std::vector<Vocab>>>& eval_mwts() {
  static const std::vector<std::pair<const char*, std::vector<Vocab>>> m = {
      {"del", {{"di", "di", "ADP"}, {"il", "il", "DET"}}},
      {"alla", {{"a", "a", "ADP"}, {"la", "il", "DET"}}},
      {"portarlo", {{"portar", "portare", "VERB"}, {"lo", "lo", "PRON"}}}};
  return m;
}

const char* other_class_tag(std::string_view upos) {
  return coarse_map(upos) == 'N' ? "VERB" : "NOUN";
}

struct GoldSurface {
  std::string form;
  std::vector<Vocab> words;
  bool multiword;
  Span span;
};

struct RandomDoc {
  std::string conllu;
  std::string text;
  std::vector<std::vector<GoldSurface>> sentences;
};

RandomDoc random_gold(std::mt19937_64& rng) {
  RandomDoc doc;
  std::size_t chars = 0;
  const auto nsent = 1 + rng() % 4;
  for (std::size_t s = 0; s < nsent; ++s) {
    std::vector<GoldSurface> surf;
    const auto n = 2 + rng() % 7;
    for (std::size_t k = 0; k < n; ++k) {
      if (rng() % 6 == 0) {
        const auto& [form, words] = eval_mwts()[rng() % eval_mwts().size()];
        surf.push_back({form, words, true, {}});
      } else {
        const auto& v = eval_vocab()[rng() % eval_vocab().size()];
        surf.push_back({v.form, {v}, false, {}});
      }
    }
    std::string sentence_text;
    if (!doc.text.empty()) {
      doc.text += '\n';
      ++chars;
    }
    for (std::size_t k = 0; k < surf.size(); ++k) {
      if (k > 0) {
        sentence_text += ' ';
        ++chars;
      }
      const auto len = utf8::length(surf[k].form);
      surf[k].span = {chars, chars + len};
      chars += len;
      sentence_text += surf[k].form;
    }
    doc.text += sentence_text;
    doc.conllu += "# sent_id = " + std::to_string(s + 1) + "\n# text = " + sentence_text + "\n";
    std::size_t id = 1;
    for (const auto& x : surf) {
      if (x.multiword) {
        doc.conllu += std::to_string(id) + "-" + std::to_string(id + x.words.size() - 1) + "\t" + x.form +
                      "\t_\t_\t_\t_\t_\t_\t_\t_\n";
      }
      for (const auto& w : x.words) {
        doc.conllu += std::to_string(id++) + "\t" + w.form + "\t" + w.lemma + "\t" + w.upos + "\t_\t_\t_\t_\t_\t_\n";
      }
    }
    doc.conllu += "\n";
    doc.sentences.push_back(std::move(surf));
  }
  return doc;
}

Token make_token(const std::string& text, std::size_t begin, std::size_t end) {
  std::size_t byte_begin = 0;
  std::size_t c = 0;
  while (c < begin) {
    byte_begin += utf8::decode(text, byte_begin).length;
    ++c;
  }
  std::size_t byte_end = byte_begin;
  while (c < end) {
    byte_end += utf8::decode(text, byte_end).length;
    ++c;
  }
  Token t;
  t.begin = begin;
  t.end = end;
  t.byte_begin = byte_begin;
  t.byte_end = byte_end;
  t.surface = text.substr(byte_begin, byte_end - byte_begin);
  return t;
}

std::string capitalized(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

}  // namespace

CheckResult check_eval_oracle(std::size_t documents, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0, 1);
  std::size_t words_seen = 0;
  for (std::size_t d = 0; d < documents; ++d) {
    const auto doc = random_gold(rng);
    const auto gold = read_conllu(doc.conllu);
    const std::string tag = "document " + std::to_string(d);

    // gold token boundaries: every word aligns, errors are the only misses
    {
      auto system = evaluation_input(gold, EvalMode::gold_tokens);
      std::size_t n = 0;
      std::size_t pos_right = 0;
      std::size_t lemma_right = 0;
      std::size_t k = 0;
      for (const auto& s : doc.sentences) {
        bool initial = true;
        for (const auto& x : s) {
          for (const auto& w : x.words) {
            auto& t = system.tokens.at(k++);
            ++n;
            const bool pos_error = coin(rng) < 0.2;
            const bool lemma_error = coin(rng) < 0.2;
            t.pos = pos_error ? other_class_tag(w.upos) : w.upos;
            t.lemma = lemma_error ? std::string("x") + w.lemma
                      : (initial && std::string_view(w.upos) != "PROPN" && coin(rng) < 0.5) ? capitalized(w.lemma)
                                                                                            : std::string(w.lemma);
            pos_right += !pos_error;
            lemma_right += !lemma_error;
            initial = false;
          }
        }
      }
      if (k != system.tokens.size()) return fail(tag + ": gold-token input has " + std::to_string(system.tokens.size()) + " tokens");
      const auto p = eval_pos(system, gold, EvalMode::gold_tokens);
      const auto l = eval_lemma(system, gold, EvalMode::gold_tokens);
      if (p.tokens != n || p.correct != pos_right) {
        return fail(tag + " gold mode: eval_pos " + std::to_string(p.correct) + "/" + std::to_string(p.tokens) +
                    ", recount " + std::to_string(pos_right) + "/" + std::to_string(n));
      }
      if (l.tokens != n || l.correct != lemma_right) {
        return fail(tag + " gold mode: eval_lemma " + std::to_string(l.correct) + "/" + std::to_string(l.tokens) +
                    ", recount " + std::to_string(lemma_right) + "/" + std::to_string(n));
      }
      if (p.accuracy() != static_cast<double>(pos_right) / static_cast<double>(n)) return fail(tag + ": accuracy formula");
      words_seen += n;
    }

    // raw text: system tokens merge, split or keep gold surfaces
    {
      Document system(doc.text);
      if (evaluation_input(gold, EvalMode::raw_text).text() != doc.text) return fail(tag + ": raw evaluation text differs");
      std::size_t n = 0;
      std::size_t pos_right = 0;
      std::size_t lemma_right = 0;
      for (const auto& s : doc.sentences) {
        for (std::size_t k = 0; k < s.size(); ++k) {
          const auto& x = s[k];
          n += x.words.size();
          const double r = coin(rng);
          if (r < 0.1 && k + 1 < s.size()) {
            system.tokens.push_back(make_token(doc.text, x.span.begin, s[k + 1].span.end));
            system.tokens.back().pos = "X";
            system.tokens.back().lemma = "x";
            n += s[k + 1].words.size();
            ++k;
            continue;
          }
          if (r < 0.2 && x.span.end - x.span.begin >= 2) {
            system.tokens.push_back(make_token(doc.text, x.span.begin, x.span.begin + 1));
            system.tokens.push_back(make_token(doc.text, x.span.begin + 1, x.span.end));
            for (std::size_t m = 0; m < 2; ++m) {
              system.tokens[system.tokens.size() - 1 - m].pos = x.words.front().upos;
              system.tokens[system.tokens.size() - 1 - m].lemma = x.words.front().lemma;
            }
            continue;
          }
          system.tokens.push_back(make_token(doc.text, x.span.begin, x.span.end));
          auto& t = system.tokens.back();
          const auto& w = x.words.front();
          const bool pos_error = coin(rng) < 0.2;
          const bool lemma_error = coin(rng) < 0.2;
          t.pos = pos_error ? other_class_tag(w.upos) : w.upos;
          t.lemma = lemma_error ? std::string("x") + w.lemma : std::string(w.lemma);
          if (!x.multiword) {
            pos_right += !pos_error;
            lemma_right += !lemma_error;
          }
        }
      }
      for (std::size_t i = 0; i < system.tokens.size(); ++i) system.tokens[i].index = i;
      const auto p = eval_pos(system, gold, EvalMode::raw_text);
      const auto l = eval_lemma(system, gold, EvalMode::raw_text);
      if (p.tokens != n || p.correct != pos_right) {
        return fail(tag + " raw mode: eval_pos " + std::to_string(p.correct) + "/" + std::to_string(p.tokens) +
                    ", recount " + std::to_string(pos_right) + "/" + std::to_string(n));
      }
      if (l.tokens != n || l.correct != lemma_right) {
        return fail(tag + " raw mode: eval_lemma " + std::to_string(l.correct) + "/" + std::to_string(l.tokens) +
                    ", recount " + std::to_string(lemma_right) + "/" + std::to_string(n));
      }
      words_seen += n;
    }
  }
  return {true, std::to_string(documents) + " documents, " + std::to_string(words_seen) +
                    " gold words in both modes match the recount"};
}

namespace {

std::vector<Span> random_side(std::mt19937_64& rng, std::size_t text_length, std::size_t max_tokens) {
  std::vector<Span> out;
  std::size_t pos = rng() % 3;
  const auto want = rng() % (max_tokens + 1);
  while (out.size() < want) {
    const auto len = 1 + rng() % 4;
    if (pos + len > text_length) break;
    out.push_back({pos, pos + len});
    pos += len + rng() % 3;
  }
  return out;
}

// A second tokenization of the same text: each span is kept, merged with
// its successor, split in two or has its end moved.
std::vector<Span> perturbed(std::mt19937_64& rng, const std::vector<Span>& spans, std::size_t max_tokens) {
  std::vector<Span> out;
  for (std::size_t i = 0; i < spans.size() && out.size() < max_tokens; ++i) {
    const auto r = rng() % 20;
    const auto& s = spans[i];
    if (r < 3 && i + 1 < spans.size()) {
      out.push_back({s.begin, spans[++i].end});
    } else if (r < 6 && s.end - s.begin >= 2 && out.size() + 1 < max_tokens) {
      const auto mid = s.begin + 1 + rng() % (s.end - s.begin - 1);
      out.push_back({s.begin, mid});
      out.push_back({mid, s.end});
    } else if (r < 8 && s.end - s.begin >= 2) {
      out.push_back({s.begin, s.end - 1});
    } else {
      out.push_back(s);
    }
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CheckResult check_alignment_partition(std::size_t cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t length = 24;
  std::map<AlignKind, std::size_t> kinds;
  for (std::size_t c = 0; c < cases; ++c) {
    const auto gold = random_side(rng, length, 8);
    const auto sys = rng() % 4 == 0 ? random_side(rng, length, 8) : perturbed(rng, gold, 8);
    const auto alignment = align_tokens(sys, gold, length);

    UnionFind uf(sys.size() + gold.size());
    for (std::size_t i = 0; i < sys.size(); ++i) {
      for (std::size_t j = 0; j < gold.size(); ++j) {
        if (std::max(sys[i].begin, gold[j].begin) < std::min(sys[i].end, gold[j].end)) uf.unite(i, sys.size() + j);
      }
    }
    std::map<std::size_t, std::pair<std::set<std::size_t>, std::set<std::size_t>>> components;
    for (std::size_t i = 0; i < sys.size(); ++i) components[uf.find(i)].first.insert(i);
    for (std::size_t j = 0; j < gold.size(); ++j) components[uf.find(sys.size() + j)].second.insert(j);

    std::set<std::pair<std::set<std::size_t>, std::set<std::size_t>>> expected;
    for (const auto& [root, members] : components) expected.insert(members);
    std::set<std::pair<std::set<std::size_t>, std::set<std::size_t>>> got;
    std::vector<int> sys_seen(sys.size());
    std::vector<int> gold_seen(gold.size());
    std::map<AlignKind, std::size_t> counts;
    for (const auto& g : alignment.groups) {
      got.insert({std::set<std::size_t>(g.system.begin(), g.system.end()), std::set<std::size_t>(g.gold.begin(), g.gold.end())});
      for (auto i : g.system) ++sys_seen[i];
      for (auto j : g.gold) ++gold_seen[j];

      AlignKind want = AlignKind::mismatched;
      if (!g.system.empty() && !g.gold.empty()) {
        std::size_t sb = SIZE_MAX, se = 0, gb = SIZE_MAX, ge = 0;
        for (auto i : g.system) sb = std::min(sb, sys[i].begin), se = std::max(se, sys[i].end);
        for (auto j : g.gold) gb = std::min(gb, gold[j].begin), ge = std::max(ge, gold[j].end);
        if (sb == gb && se == ge) {
          if (g.system.size() == 1 && g.gold.size() == 1) want = AlignKind::exact;
          else if (g.system.size() == 1) want = AlignKind::merged;
          else if (g.gold.size() == 1) want = AlignKind::split;
        }
      }
      if (g.kind != want) return fail("case " + std::to_string(c) + ": group classified " + std::string(to_string(g.kind)) + ", expected " + std::string(to_string(want)));
      ++counts[g.kind];
      ++kinds[g.kind];
    }
    if (got != expected) return fail("case " + std::to_string(c) + ": groups differ from the overlap components");
    if (std::any_of(sys_seen.begin(), sys_seen.end(), [](int n) { return n != 1; }) ||
        std::any_of(gold_seen.begin(), gold_seen.end(), [](int n) { return n != 1; })) {
      return fail("case " + std::to_string(c) + ": groups do not partition the tokens");
    }
    if (counts[AlignKind::exact] != alignment.exact || counts[AlignKind::merged] != alignment.merged ||
        counts[AlignKind::split] != alignment.split || counts[AlignKind::mismatched] != alignment.mismatched) {
      return fail("case " + std::to_string(c) + ": counters disagree with the groups");
    }
    std::size_t paired_sys = 0;
    std::size_t paired_gold = 0;
    for (const auto& [s, g] : alignment.pairs()) {
      paired_sys += s.has_value();
      paired_gold += g.has_value();
    }
    if (paired_sys != sys.size() || paired_gold != gold.size()) return fail("case " + std::to_string(c) + ": pairs() loses tokens");
  }
  return {true, std::to_string(cases) + " random cases (exact " + std::to_string(kinds[AlignKind::exact]) + ", merged " +
                    std::to_string(kinds[AlignKind::merged]) + ", split " + std::to_string(kinds[AlignKind::split]) +
                    ", mismatched " + std::to_string(kinds[AlignKind::mismatched]) + ") match the overlap components"};
}

}  // namespace tint::testing
