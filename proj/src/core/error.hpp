#pragma once

#include <stdexcept>
#include <string>

namespace nhls {

enum class ErrorCode {
  InvalidArgument = 1,
  ParseError,
  IoError,
  NotAtEp,
  SingularSystem,
  NoPropagatingChannel,
  DefectiveSpectrum,
  SupportClipped,
  InteractionIncomplete,
  BudgetViolation,
  NumericalFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace nhls
