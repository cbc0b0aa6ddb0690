#include "hardimer/error.hpp"

namespace hardimer {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "input error";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Resource: return "resource error";
    case ErrorKind::Numeric: return "numeric error";
    case ErrorKind::Singular: return "singular error";
    case ErrorKind::Internal: return "internal error";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

}  // namespace hardimer
