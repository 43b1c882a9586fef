#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mmx {

enum class ErrorCode {
  ZeroInput,
  Unsupported,
  InvalidRing,
  NotTorsion,
  NotArtinian,
  NotNoetherian,
  NotRepresentable,
  NotStabilizing,
  StabilizationFailed,
  InvalidIndex,
  ParseError,
  NotPrime,
  UnknownSuite,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the 1-based character position of the offending input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& detail)
      : Error(ErrorCode::ParseError, detail), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mmx
