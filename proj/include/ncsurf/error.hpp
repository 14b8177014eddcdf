#pragma once

#include <stdexcept>
#include <string>

namespace ncsurf {

enum class ErrorCode {
  BadPrime,
  NotZeroDimensional,
  DegenerateRelations,
  NotPotential,
  WrongHilbert,
  InternalInconsistency,
  MismatchWithComplex,
  UnclassifiedCubic,
  DegeneratePencil,
  SingularPencil,
  UnknownSymbol,
  InvalidInput,
};

const char* error_name(ErrorCode code);

/// Domain error raised by the library; `code()` identifies the failure kind
/// and `stage()` is filled in by the pipeline when it propagates.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }
  const std::string& stage() const { return stage_; }
  void set_stage(std::string stage) { stage_ = std::move(stage); }

 private:
  ErrorCode code_;
  std::string stage_;
};

inline const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::DegenerateRelations: return "DegenerateRelations";
    case ErrorCode::NotPotential: return "NotPotential";
    case ErrorCode::WrongHilbert: return "WrongHilbert";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::MismatchWithComplex: return "MismatchWithComplex";
    case ErrorCode::UnclassifiedCubic: return "UnclassifiedCubic";
    case ErrorCode::DegeneratePencil: return "DegeneratePencil";
    case ErrorCode::SingularPencil: return "SingularPencil";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

}  // namespace ncsurf
