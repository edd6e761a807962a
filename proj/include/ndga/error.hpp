#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndga {

enum class ErrorCode {
  SyntaxError,
  ForwardReference,
  NonIntegerCoefficient,
  UnknownName,
  SpaceMismatch,
  NotHomogeneous,
  DivisionByZero,
  Singular,
  NotNilpotent,
  NotIntegrable,
  InvalidStructure,
  NoMatch,
  Ambiguous,
  ProfileNotInTable,
  IncompatibleBasisChange,
  AxiomViolation,
  NotCompatible,
  Incompatible,
  Degenerate,
  EmptyFamily,
  ParamsDegenerate,
  PreconditionViolated,
  InvalidArgument,
};

inline const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ForwardReference: return "ForwardReference";
    case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::ProfileNotInTable: return "ProfileNotInTable";
    case ErrorCode::IncompatibleBasisChange: return "IncompatibleBasisChange";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::ParamsDegenerate: return "ParamsDegenerate";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorCode code, const std::string& what, std::size_t position = npos)
      : std::runtime_error(std::string(code_name(code)) + ": " + what +
                           (position == npos ? "" : " at position " + std::to_string(position))),
        code_(code),
        position_(position) {}

  ErrorCode code() const { return code_; }
  std::size_t position() const { return position_; }

 private:
  ErrorCode code_;
  std::size_t position_;
};

}  // namespace ndga
