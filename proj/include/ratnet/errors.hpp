#pragma once

#include <stdexcept>
#include <string>

namespace ratnet {

enum class Err {
  DivisionByZero,
  ParseError,
  MixedField,
  ArityMismatch,
  BudgetExceeded,
  BadFanInDepth,
  EmptyOutputs,
  DanglingEdge,
  DuplicateEdge,
  RationalActivationNotExpandable,
  CharacteristicTwo,
  NotRationalActivation,
  RejectionBudgetExceeded,
  DegenerateSystem,
  NonsenseInput,
  BadInput,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::ParseError: return "ParseError";
    case Err::MixedField: return "MixedField";
    case Err::ArityMismatch: return "ArityMismatch";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::BadFanInDepth: return "BadFanInDepth";
    case Err::EmptyOutputs: return "EmptyOutputs";
    case Err::DanglingEdge: return "DanglingEdge";
    case Err::DuplicateEdge: return "DuplicateEdge";
    case Err::RationalActivationNotExpandable: return "RationalActivationNotExpandable";
    case Err::CharacteristicTwo: return "CharacteristicTwo";
    case Err::NotRationalActivation: return "NotRationalActivation";
    case Err::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case Err::DegenerateSystem: return "DegenerateSystem";
    case Err::NonsenseInput: return "NonsenseInput";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const noexcept { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace ratnet
