#include "hecke/error.hpp"

namespace hecke {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::OutOfRange: return "index out of range";
    case ErrorCode::Parse: return "syntax error";
    case ErrorCode::DivisionByZero: return "division by zero";
    case ErrorCode::VanishingDenominator: return "vanishing denominator";
    case ErrorCode::NotSemisimple: return "non-semisimple specialization";
    case ErrorCode::NotDiagonalizable: return "not diagonalizable";
    case ErrorCode::Reducible: return "reducible";
    case ErrorCode::EqualSpectralParameters: return "equal spectral parameters";
    case ErrorCode::InvalidContentString: return "invalid content string";
    case ErrorCode::ParamsMismatch: return "parameter mismatch";
    case ErrorCode::Capacity: return "capacity exceeded";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace hecke
