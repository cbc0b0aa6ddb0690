#pragma once

#include <stdexcept>
#include <string>

namespace hardimer {

enum class ErrorKind {
  Input,     // malformed argument (bad word, out-of-range index, bad tree)
  Domain,    // operation undefined for the argument (star of non-proper series)
  Resource,  // size bound exceeded
  Numeric,   // iteration failed to converge, non-finite value
  Singular,  // vanishing denominator in a reciprocal sum
  Internal,  // self-consistency check failed
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace hardimer
