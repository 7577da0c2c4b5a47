#include "tint/registry.hpp"

#include "tint/lemmatizer.hpp"
#include "tint/morphology.hpp"
#include "tint/pos_tagger.hpp"
#include "tint/tokenizer.hpp"

namespace tint {

AnnotatorRegistry standard_registry() {
  AnnotatorRegistry r;
  r.add(tokenize_spec(), make_tokenize_annotator);
  r.add(morph_spec(), make_morph_annotator);
  r.add(pos_spec(), make_pos_annotator);
  r.add(lemma_spec(), make_lemma_annotator);
  return r;
}

Pipeline pipeline_from_file(const std::filesystem::path& path, const std::set<std::string>& initial) {
  return Pipeline::build(standard_registry(), PipelineConfig::from_properties(load_properties(path)), initial);
}

}  // namespace tint
