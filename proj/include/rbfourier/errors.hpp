#ifndef RBFOURIER_ERRORS_HPP_
#define RBFOURIER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rbf {

enum class ErrorCode {
  // group construction
  ClosureOverflow,
  NonUnitaryGenerator,
  UnknownLabel,
  // process matrices / bases
  NonUnitaryInput,
  BadBasis,
  DimensionMismatch,
  // fourier
  TableMismatch,
  IncompleteSpectrum,
  // gauge construction
  IdealNotRankOne,
  DegenerateDominantEigenvalue,
  ComplexDominantEigenvalue,
  SingularGauge,
  // decay fitting
  InsufficientData,
  FitDiverged,
  // configuration input
  ParseError,
  ValidationError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

  // Input errors (bad config, bad matrices) exit the CLI with status 1;
  // numerical failures (degenerate spectra, singular gauges) with status 2.
  bool is_input_error() const {
    switch (code_) {
      case ErrorCode::ParseError:
      case ErrorCode::ValidationError:
      case ErrorCode::UnknownLabel:
      case ErrorCode::NonUnitaryGenerator:
      case ErrorCode::NonUnitaryInput:
      case ErrorCode::BadBasis:
      case ErrorCode::DimensionMismatch:
      case ErrorCode::InsufficientData:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rbf

#endif  // RBFOURIER_ERRORS_HPP_
