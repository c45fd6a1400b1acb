#ifndef EMCS_ERRORS_HPP
#define EMCS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emcs {

// Base of everything the engine throws on purpose.
class EmcsError : public std::runtime_error {
public:
  explicit EmcsError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (system specs, observation streams, state files).
class ParseError : public EmcsError {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : EmcsError("parse error at " + std::to_string(line) + ":" +
                  std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// A structurally invalid system, knowledge base, or operation argument.
class ValidationError : public EmcsError {
public:
  using EmcsError::EmcsError;
};

// A context derived bottom; carries the offending individual.
class InconsistencyError : public EmcsError {
public:
  InconsistencyError(const std::string& msg, std::string individual)
      : EmcsError(msg), individual_(std::move(individual)) {}

  const std::string& individual() const { return individual_; }

private:
  std::string individual_;
};

// A broken engine invariant: a knowledge base shrinking under monotone
// operations, the iteration cap firing, schematic rules on a ground-only
// path, a non-singleton ACC where determinism is required.
class IntegrityError : public EmcsError {
public:
  using EmcsError::EmcsError;
};

// A semantics-level failure, e.g. no grounded equilibrium at some instant.
class SemanticsError : public EmcsError {
public:
  using EmcsError::EmcsError;
};

// Oracle refusal: the candidate universe exceeds the configured bound.
class UniverseBoundError : public EmcsError {
public:
  using EmcsError::EmcsError;
};

}  // namespace emcs

#endif
