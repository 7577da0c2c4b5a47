#include "support.hpp"

#include <fstream>
#include <mutex>

#include <unistd.h>

#include "tint/conllu.hpp"
#include "tint/utf8.hpp"

namespace tint::testing {

TempDir::TempDir() {
  static std::mt19937_64 rng(std::random_device{}());
  const auto base = std::filesystem::temp_directory_path();
  do {
    path_ = base / ("tint-test-" + std::to_string(::getpid()) + "-" + std::to_string(rng() % 1000000000));
  } while (std::filesystem::exists(path_));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

std::filesystem::path compile_store(const TempDir& dir, const std::string& tsv, const std::string& name) {
  const auto out = dir / name;
  compile_lexicon(tsv, out);
  return out;
}

const DeskAssets& desk_assets() {
  static TempDir dir;
  static DeskAssets assets;
  static std::once_flag once;
  std::call_once(once, [] {
    const std::filesystem::path prebuilt = TINT_TEST_DESK_DIR;
    assets.lexicon = prebuilt / "desk.mlex";
    assets.model = prebuilt / "desk.posm";
    if (!std::filesystem::exists(assets.lexicon) || !std::filesystem::exists(assets.model)) {
      assets.lexicon = dir / "desk.mlex";
      compile_lexicon_file(kDataDir / "desk" / "desk-lexicon.tsv", assets.lexicon);
      assets.model = dir / "desk.posm";
      const auto corpus = tagged_sentences(read_conllu_file(kDataDir / "desk" / "desk-train.conllu"));
      save_model(train(corpus, TrainOptions{}), assets.model);
    }
    assets.config = dir / "tint.properties";
    write_text(assets.config,
               "annotators = tokenize, morph, pos, lemma\n"
               "morph.lexicon = " + assets.lexicon.string() + "\n"
               "pos.model = " + assets.model.string() + "\n");
  });
  return assets;
}

std::string fixture_lexicon() {
  return "porta\tporta\tNOUN-F:s\n"
         "porta\tportare\tVER:ind+pres+3+s\n"
         "porta\tportare\tVER:impr+pres+2+s\n"
         "portare\tportare\tVER:inf+pres\n"
         "porte\tporta\tNOUN-F:p\n"
         "direzionale\tdirezionale\tADJ:pos+m+s\n"
         "direzionale\tdirezionale\tADJ:pos+f+s\n"
         "latte\tlatte\tNOUN-M:s\n"
         "latte\tlatta\tNOUN-F:p\n"
         "latta\tlatta\tNOUN-F:s\n"
         "il\til\tART-M:s\n"
         "le\til\tART-F:p\n"
         "cane\tcane\tNOUN-M:s\n"
         "dorme\tdormire\tVER:ind+pres+3+s\n"
         "dormire\tdormire\tVER:inf+pres\n";
}

std::string random_text(std::mt19937_64& rng, std::size_t max_chars) {
  static const std::vector<char32_t> pool = {
      'a', 'b', 'c', 'd', 'e', 'i', 'l', 'm', 'n', 'o', 'p', 'r', 's', 't', 'u', 'z', 'A', 'D', 'S', 'P',
      U'à', U'è', U'é', U'ì', U'ò', U'ù', U'È', '0', '1', '5', '9', '.', ',', ';', ':', '!', '?', '\'',
      '"', '(', ')', '-', '/', '@', '%', U'«', U'»', U'…', U'’', U'€', ' ', ' ', ' ', '\n', '\t',
      U' ', U' ', U'😀', U'𝔸', U'中'};
  std::uniform_int_distribution<std::size_t> len(0, max_chars);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::string out;
  const auto n = len(rng);
  for (std::size_t i = 0; i < n; ++i) utf8::append(out, pool[pick(rng)]);
  return out;
}

}  // namespace tint::testing
