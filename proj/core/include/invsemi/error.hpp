#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invsemi {

/// Machine-readable failure categories.
///
/// The codes below `Inconsistency` are ordinary domain errors (bad input,
/// unmet preconditions). `Inconsistency` and the codes after it mean a
/// computed object contradicts a theorem the library checks; callers treat
/// those as fatal.
enum class ErrorCode {
  EmptyInput,
  InvalidGenerator,
  GcdNotOne,
  TooLarge,
  Overflow,
  NotInSemigroup,
  ZeroModulus,
  NotApplicable,
  DimensionMismatch,
  ZeroPolynomial,
  DegreeZero,
  NotCoprime,
  NotMember,
  NotMinimalGlue,
  NotInApery,
  MemberAlready,
  NotSymmetric,
  NotCoprimeAlphas,
  AlphaTooSmall,
  BothOdd,
  MultiplicityOutOfRange,
  NotFourGenerated,
  IsCompleteIntersection,
  BoundExceeded,
  // fatal from here on
  Inconsistency,
  NoShapeMatch,
  StructureNotFound,
  NoWitness,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool fatal() const noexcept { return code_ >= ErrorCode::Inconsistency; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

/// Throws `Inconsistency` with `what` unless `condition` holds.
// The message is built only on failure.
template <class Message>
void ensure(bool condition, Message&& what) {
  if (!condition) fail(ErrorCode::Inconsistency, std::string(what()));
}

}  // namespace invsemi
