#include "invsemi/error.hpp"

namespace invsemi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotInSemigroup: return "NotInSemigroup";
    case ErrorCode::ZeroModulus: return "ZeroModulus";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotMinimalGlue: return "NotMinimalGlue";
    case ErrorCode::NotInApery: return "NotInApery";
    case ErrorCode::MemberAlready: return "MemberAlready";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotCoprimeAlphas: return "NotCoprimeAlphas";
    case ErrorCode::AlphaTooSmall: return "AlphaTooSmall";
    case ErrorCode::BothOdd: return "BothOdd";
    case ErrorCode::MultiplicityOutOfRange: return "MultiplicityOutOfRange";
    case ErrorCode::NotFourGenerated: return "NotFourGenerated";
    case ErrorCode::IsCompleteIntersection: return "IsCompleteIntersection";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::Inconsistency: return "Inconsistency";
    case ErrorCode::NoShapeMatch: return "NoShapeMatch";
    case ErrorCode::StructureNotFound: return "StructureNotFound";
    case ErrorCode::NoWitness: return "NoWitness";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace invsemi
