#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tint {

// Base class for every error the library raises on purpose. The CLI maps
// these to exit codes; anything else is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// pipeline

class DuplicateAnnotator : public Error {
 public:
  explicit DuplicateAnnotator(const std::string& name)
      : Error("annotator already registered: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnknownAnnotator : public Error {
 public:
  explicit UnknownAnnotator(const std::string& name)
      : Error("unknown annotator: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnsatisfiedRequirement : public Error {
 public:
  UnsatisfiedRequirement(const std::string& annotator, const std::string& capability)
      : Error("annotator '" + annotator + "' requires '" + capability +
              "', which no earlier annotator provides"),
        annotator_(annotator),
        capability_(capability) {}
  const std::string& annotator() const { return annotator_; }
  const std::string& capability() const { return capability_; }

 private:
  std::string annotator_;
  std::string capability_;
};

class AnnotatorFailure : public Error {
 public:
  AnnotatorFailure(const std::string& annotator, const std::string& cause)
      : Error("annotator '" + annotator + "' failed: " + cause),
        annotator_(annotator),
        cause_(cause) {}
  const std::string& annotator() const { return annotator_; }
  const std::string& cause() const { return cause_; }

 private:
  std::string annotator_;
  std::string cause_;
};

class MissingPrerequisite : public Error {
 public:
  using Error::Error;
};

// resources and files

class ResourceLoadError : public Error {
 public:
  using Error::Error;
};

class StoreCorrupt : public Error {
 public:
  using Error::Error;
};

class ModelLoadError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

// training and evaluation

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("training corpus is empty") {}
};

class MissingGoldTag : public Error {
 public:
  MissingGoldTag(std::size_t sentence, std::size_t index)
      : Error("missing gold UPOS at sentence " + std::to_string(sentence) + ", token " +
              std::to_string(index)),
        sentence_(sentence),
        index_(index) {}
  std::size_t sentence() const { return sentence_; }
  std::size_t index() const { return index_; }

 private:
  std::size_t sentence_;
  std::size_t index_;
};

class UnknownTag : public Error {
 public:
  explicit UnknownTag(const std::string& tag) : Error("not a UPOS tag: " + tag) {}
};

class OffsetDomainError : public Error {
 public:
  using Error::Error;
};

class EmptyGold : public Error {
 public:
  EmptyGold() : Error("gold standard contains no tokens") {}
};

}  // namespace tint
