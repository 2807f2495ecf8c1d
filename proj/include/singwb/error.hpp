#pragma once

#include <stdexcept>
#include <string>

namespace swb {

enum class Err {
  DivisionByZero = 1,
  IncompatibleRadicals,
  BudgetExceeded,
  VariableMismatch,
  UnsupportedType,
  InvalidAutomorphism,
  DimensionMismatch,
  ShapeMismatch,
  SingularSystem,
  ClosureBudgetExceeded,
  UnsupportedLabel,
  NormalFormMismatch,
  PullbackMismatch,
  UnclassifiedSingularity,
  Parse,
  Usage,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

}  // namespace swb
