#include "qlift/errors.hpp"

namespace qlift {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::orthogonality: return "orthogonality";
    case ErrorKind::validation: return "validation";
    case ErrorKind::budget: return "budget";
    case ErrorKind::parse: return "parse";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::structure: return "structure";
    case ErrorKind::consistency: return "consistency";
  }
  return "unknown";
}

}  // namespace qlift
