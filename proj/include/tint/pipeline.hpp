#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tint/document.hpp"
#include "tint/properties.hpp"

namespace tint {

// Declared contract of an annotator: which capabilities it consumes and
// which layers it produces. Capability names form an open vocabulary.
struct AnnotatorSpec {
  std::string name;
  std::set<std::string> required;
  std::set<std::string> provided;
};

// An annotator holds immutable resources only; annotate() must not keep
// per-document state, so one instance may serve many threads.
class Annotator {
 public:
  virtual ~Annotator() = default;
  virtual void annotate(Document& doc) const = 0;
};

using AnnotatorFactory = std::function<std::unique_ptr<Annotator>(const Properties&)>;

class AnnotatorRegistry {
 public:
  // Throws DuplicateAnnotator when the name is taken.
  AnnotatorRegistry& add(AnnotatorSpec spec, AnnotatorFactory factory);

  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  // Throws UnknownAnnotator.
  const AnnotatorSpec& spec(const std::string& name) const;
  std::unique_ptr<Annotator> create(const std::string& name, const Properties& props) const;
  std::vector<std::string> names() const;

 private:
  struct Entry {
    AnnotatorSpec spec;
    AnnotatorFactory factory;
  };
  std::map<std::string, Entry> entries_;
};

struct PipelineConfig {
  std::vector<std::string> annotators;
  // annotator name -> its properties (keys without the "<name>." prefix)
  std::map<std::string, Properties> properties;

  // Reads "annotators" and dotted "<annotator>.<key>" entries.
  static PipelineConfig from_properties(const Properties& props);
};

class Pipeline {
 public:
  // Validates the given order: every annotator's requirements must be met by
  // `initial` plus the layers provided by annotators before it. The order is
  // never changed. Throws UnknownAnnotator / UnsatisfiedRequirement.
  static Pipeline build(const AnnotatorRegistry& registry, const PipelineConfig& config,
                        const std::set<std::string>& initial = {"text"});

  Document annotate(std::string text) const;

  // Runs over a document that may already hold layers (e.g. gold tokens).
  // On failure the failing annotator's layers are removed and
  // AnnotatorFailure is thrown; later annotators do not run.
  void annotate(Document& doc) const;

  // Runs annotators [first, last) only, with the same failure handling.
  void run(Document& doc, std::size_t first, std::size_t last) const;
  std::optional<std::size_t> position(std::string_view name) const;

  const std::vector<AnnotatorSpec>& specs() const { return specs_; }
  std::set<std::string> capabilities() const;

 private:
  std::set<std::string> initial_;
  std::vector<AnnotatorSpec> specs_;
  std::vector<std::shared_ptr<const Annotator>> annotators_;
};

}  // namespace tint
