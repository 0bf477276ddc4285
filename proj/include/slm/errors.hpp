#ifndef SLM_ERRORS_HPP
#define SLM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slm {

// Base class for all toolkit errors.
struct SlmError : std::runtime_error {
  explicit SlmError(const std::string& msg) : std::runtime_error(msg) {}
};

// A transition was applied in a state where it is not legal.
struct IllegalTransitionError : SlmError {
  explicit IllegalTransitionError(const std::string& msg, std::size_t step = npos)
      : SlmError(msg), step_index(step) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t step_index;
};

// A tree handed to derivation machinery is not a complete parse.
struct NotCompleteParseError : SlmError {
  explicit NotCompleteParseError(const std::string& msg) : SlmError(msg) {}
};

// Malformed textual input (bracketed trees, templates, derivation lines).
struct SyntaxError : SlmError {
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : SlmError(msg + " at line " + std::to_string(line) + ", column " +
                 std::to_string(column)),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

// Malformed model / event file.
struct FormatError : SlmError {
  FormatError(const std::string& msg, std::size_t line)
      : SlmError(msg + " at line " + std::to_string(line)), line(line) {}
  std::size_t line;
};

// Event context has fewer fields than a template requires.
struct ArityMismatchError : SlmError {
  explicit ArityMismatchError(const std::string& msg) : SlmError(msg) {}
};

// Training was asked to run on an empty event set.
struct NoEventsError : SlmError {
  explicit NoEventsError(const std::string& msg) : SlmError(msg) {}
};

// Numerical blow-up during training.
struct NonfiniteWeightError : SlmError {
  explicit NonfiniteWeightError(const std::string& msg) : SlmError(msg) {}
};

// A scheme needing gold parses was given raw text.
struct MissingParseError : SlmError {
  explicit MissingParseError(const std::string& msg) : SlmError(msg) {}
};

// Bad command line.
struct UsageError : SlmError {
  explicit UsageError(const std::string& msg) : SlmError(msg) {}
};

// Filesystem trouble.
struct IoError : SlmError {
  explicit IoError(const std::string& msg) : SlmError(msg) {}
};

}  // namespace slm

#endif  // SLM_ERRORS_HPP
