// Error taxonomy shared by the pipeline, emitters and evaluator.

#ifndef ENTITREE_ERRORS_HPP
#define ENTITREE_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace entitree {

enum class ErrorKind {
  EmptyInput,
  UnresolvablePronoun,
  NoExtractableContent,
  InheritanceCycle,
  AmbiguousType,
  SchemaError,
  InvalidTree,
  UnknownTemplate,
  EmptyReference,
  ConfigError,
  IoError,
  CorpusError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::EmptyInput:           return "EmptyInput";
    case ErrorKind::UnresolvablePronoun:  return "UnresolvablePronoun";
    case ErrorKind::NoExtractableContent: return "NoExtractableContent";
    case ErrorKind::InheritanceCycle:     return "InheritanceCycle";
    case ErrorKind::AmbiguousType:        return "AmbiguousType";
    case ErrorKind::SchemaError:          return "SchemaError";
    case ErrorKind::InvalidTree:          return "InvalidTree";
    case ErrorKind::UnknownTemplate:      return "UnknownTemplate";
    case ErrorKind::EmptyReference:       return "EmptyReference";
    case ErrorKind::ConfigError:          return "ConfigError";
    case ErrorKind::IoError:              return "IoError";
    case ErrorKind::CorpusError:          return "CorpusError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  using Span = std::pair<std::size_t, std::size_t>;  // character offsets

  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  Error(ErrorKind kind, std::string message, Span span)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message +
                           " [chars " + std::to_string(span.first) + ".." +
                           std::to_string(span.second) + ")"),
        kind_(kind),
        span_(span) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<Span>& span() const { return span_; }

 private:
  ErrorKind kind_;
  std::optional<Span> span_;
};

}  // namespace entitree

#endif  // ENTITREE_ERRORS_HPP
