#include "tint/pipeline.hpp"

#include <algorithm>

#include "tint/error.hpp"

namespace tint {

AnnotatorRegistry& AnnotatorRegistry::add(AnnotatorSpec spec, AnnotatorFactory factory) {
  if (spec.provided.empty()) throw Error("annotator '" + spec.name + "' provides nothing");
  if (entries_.count(spec.name)) throw DuplicateAnnotator(spec.name);
  auto name = spec.name;
  entries_.emplace(std::move(name), Entry{std::move(spec), std::move(factory)});
  return *this;
}

const AnnotatorSpec& AnnotatorRegistry::spec(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownAnnotator(name);
  return it->second.spec;
}

std::unique_ptr<Annotator> AnnotatorRegistry::create(const std::string& name,
                                                     const Properties& props) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownAnnotator(name);
  return it->second.factory(props);
}

std::vector<std::string> AnnotatorRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, entry] : entries_) out.push_back(name);
  return out;
}

PipelineConfig PipelineConfig::from_properties(const Properties& props) {
  PipelineConfig config;
  config.annotators = props.get_list("annotators");
  for (const auto& name : config.annotators) config.properties[name] = props.scoped(name);
  return config;
}

Pipeline Pipeline::build(const AnnotatorRegistry& registry, const PipelineConfig& config,
                         const std::set<std::string>& initial) {
  Pipeline pipeline;
  pipeline.initial_ = initial;
  std::set<std::string> available = initial;
  std::set<std::string> seen;
  for (const auto& name : config.annotators) {
    const AnnotatorSpec& spec = registry.spec(name);
    if (!seen.insert(name).second) throw Error("annotator listed twice: " + name);
    for (const auto& cap : spec.required) {
      if (!available.count(cap)) throw UnsatisfiedRequirement(name, cap);
    }
    available.insert(spec.provided.begin(), spec.provided.end());
    pipeline.specs_.push_back(spec);
  }
  // Construct only after the whole order validated, so a bad config never
  // pays for loading models.
  for (const auto& name : config.annotators) {
    auto it = config.properties.find(name);
    const Properties props = it != config.properties.end() ? it->second : Properties();
    pipeline.annotators_.push_back(registry.create(name, props));
  }
  return pipeline;
}

std::set<std::string> Pipeline::capabilities() const {
  std::set<std::string> caps = initial_;
  for (const auto& s : specs_) caps.insert(s.provided.begin(), s.provided.end());
  return caps;
}

Document Pipeline::annotate(std::string text) const {
  Document doc(std::move(text));
  annotate(doc);
  return doc;
}

void Pipeline::annotate(Document& doc) const { run(doc, 0, annotators_.size()); }

void Pipeline::run(Document& doc, std::size_t first, std::size_t last) const {
  last = std::min(last, annotators_.size());
  for (std::size_t i = first; i < last; ++i) {
    try {
      annotators_[i]->annotate(doc);
    } catch (const std::exception& e) {
      for (const auto& layer_name : specs_[i].provided) doc.clear_layer(layer_name);
      throw AnnotatorFailure(specs_[i].name, e.what());
    }
  }
}

std::optional<std::size_t> Pipeline::position(std::string_view name) const {
  for (std::size_t i = 0; i < specs_.size(); ++i) {
    if (specs_[i].name == name) return i;
  }
  return std::nullopt;
}

}  // namespace tint
