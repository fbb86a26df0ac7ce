#pragma once

#include <stdexcept>
#include <string>

namespace qlift {

/// Category attached to every error raised by the library. The CLI maps the
/// category onto its exit code.
enum class ErrorKind {
  dimension,      // shape mismatch between operands
  orthogonality,  // H_X H_Z^T != 0 over F2
  validation,     // a structural invariant of an input object does not hold
  budget,         // an enumeration or search exceeded its configured budget
  parse,          // malformed input file
  overflow,       // checked integer arithmetic overflowed
  structure,      // graph-level precondition violated (e.g. non-spanning forest)
  consistency,    // an internal invariant failed; indicates a bug or bad input
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qlift
