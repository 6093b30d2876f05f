#pragma once

#include <stdexcept>
#include <string>

namespace bldg {

enum class ErrorCode {
  UnsupportedDiagram,
  SizeLimit,
  BadGenerator,
  BadType,
  NotPrime,
  AmbientMismatch,
  Singular,
  FormNotPreserved,
  AxiomViolation,
  Disconnected,
  UnknownChamber,
  NotAFace,
  NotInStar,
  NotOpposite,
  EmptyFixedSet,
  NotInOmega,
  HypothesisViolated,
  HypothesisNotMet,
  NotIrreducible,
  NotChamberComplex,
  TraceAssertionFailed,
  IsotropyViolated,
  UnsupportedGeometry,
  ParseError,
  HashMismatch,
  IoError,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::UnsupportedDiagram: return "UnsupportedDiagram";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::BadGenerator: return "BadGenerator";
    case ErrorCode::BadType: return "BadType";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::FormNotPreserved: return "FormNotPreserved";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownChamber: return "UnknownChamber";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotInStar: return "NotInStar";
    case ErrorCode::NotOpposite: return "NotOpposite";
    case ErrorCode::EmptyFixedSet: return "EmptyFixedSet";
    case ErrorCode::NotInOmega: return "NotInOmega";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotChamberComplex: return "NotChamberComplex";
    case ErrorCode::TraceAssertionFailed: return "TraceAssertionFailed";
    case ErrorCode::IsotropyViolated: return "IsotropyViolated";
    case ErrorCode::UnsupportedGeometry: return "UnsupportedGeometry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::HashMismatch: return "HashMismatch";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace bldg
