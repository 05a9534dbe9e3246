#pragma once

#include <stdexcept>
#include <string>

namespace ffgeo {

/// Machine-readable failure categories. Each maps 1:1 onto a documented
/// error condition of some library operation.
enum class Errc {
  NotOddPrime,
  NotPrime,
  DegreeOutOfRange,
  OrderOverflow,
  DivisionByZero,
  MixedContexts,
  DimensionMismatch,
  ZeroVector,
  NonDistinctTriple,
  EqualPoints,
  ScanTooLarge,
  MemoryBudget,
  EmptyFamily,
  SigmaZero,
  TZero,
  NoIsotropicLine,
  RangeTooLarge,
  BadPointSet,
  UsageError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ffgeo
