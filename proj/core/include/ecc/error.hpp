#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecc {

/// Failure categories. The CLI maps each to a process exit code.
enum class ErrorKind {
  InvalidInput,       // bad argument values
  Shape,              // dimension/degree mismatch
  UnsupportedField,   // operation defined only for real collections
  SingularExpansion,  // power series with non-positive constant term
  Validation,         // vectors off the unit sphere, bad weights
  Parse,              // unreadable input file
  Resource,           // size budget exceeded
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace ecc
