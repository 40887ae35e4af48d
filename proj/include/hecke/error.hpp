#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorCode {
  InvalidArgument = 1,
  OutOfRange,
  Parse,
  DivisionByZero,
  VanishingDenominator,
  NotSemisimple,
  NotDiagonalizable,
  Reducible,
  EqualSpectralParameters,
  InvalidContentString,
  ParamsMismatch,
  Capacity,
  Overflow,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hecke
