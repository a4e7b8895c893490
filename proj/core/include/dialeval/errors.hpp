#pragma once

#include <stdexcept>
#include <string>

namespace dialeval {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (bad JSON line, bad TSV row). Carries the 1-based
// line number when known, -1 otherwise.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, long line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Structurally valid input that violates a domain invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, std::string dialog_id = "",
                           std::string field = "")
      : Error(decorate(what, dialog_id, field)),
        dialog_id_(std::move(dialog_id)),
        field_(std::move(field)) {}
  const std::string& dialog_id() const { return dialog_id_; }
  const std::string& field() const { return field_; }

 private:
  static std::string decorate(const std::string& what, const std::string& id,
                              const std::string& field) {
    std::string out = what;
    if (!id.empty()) out += " [dialog " + id + "]";
    if (!field.empty()) out += " [field " + field + "]";
    return out;
  }
  std::string dialog_id_;
  std::string field_;
};

// A sentiment provider or encoder adapter failed. Carries the component id.
class ProviderError : public Error {
 public:
  ProviderError(std::string provider_id, const std::string& what)
      : Error("[" + provider_id + "] " + what),
        provider_id_(std::move(provider_id)) {}
  const std::string& provider_id() const { return provider_id_; }

 private:
  std::string provider_id_;
};

// Correlation is undefined for the given inputs (constant vector, fewer
// than two pairs). Raised instead of returning NaN.
class UndefinedCorrelationError : public Error {
 public:
  explicit UndefinedCorrelationError(const std::string& what) : Error(what) {}
};

// Majority vote tie with no adjudicator label available.
class UnresolvedTieError : public Error {
 public:
  explicit UnresolvedTieError(const std::string& what) : Error(what) {}
};

// Invalid run configuration: unknown mode, bad hyperparameter, missing path.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace dialeval
