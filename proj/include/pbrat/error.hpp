#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbrat {

/// Domain failures reported by the library. Each kind maps to a stable
/// snake_case code used in the CLI's machine-readable error object.
enum class ErrorKind {
  Overflow,
  NotPrime,
  NotNumerical,
  NotCoprime,
  NotWellFormed,
  NotCotypeZero,
  DegenerateDenominator,
  InvalidArgument,
};

std::string_view error_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pbrat
