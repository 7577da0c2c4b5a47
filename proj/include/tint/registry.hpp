#pragma once

#include "tint/pipeline.hpp"

namespace tint {

// Registry holding the built-in annotators: tokenize, morph, pos, lemma.
AnnotatorRegistry standard_registry();

// Pipeline from a properties file. Relative paths in the file resolve
// against its directory.
Pipeline pipeline_from_file(const std::filesystem::path& path, const std::set<std::string>& initial = {"text"});

}  // namespace tint
