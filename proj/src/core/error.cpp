#include "error.hpp"

namespace nhls {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NotAtEp: return "NotAtEp";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::NoPropagatingChannel: return "NoPropagatingChannel";
    case ErrorCode::DefectiveSpectrum: return "DefectiveSpectrum";
    case ErrorCode::SupportClipped: return "SupportClipped";
    case ErrorCode::InteractionIncomplete: return "InteractionIncomplete";
    case ErrorCode::BudgetViolation: return "BudgetViolation";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace nhls
