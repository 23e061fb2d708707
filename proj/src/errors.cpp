#include "dimod/errors.hpp"

namespace dimod {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::UnivalentNode: return "UnivalentNode";
    case ErrorCode::NotTorusCellular: return "NotTorusCellular";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::DegenerateModel: return "DegenerateModel";
    case ErrorCode::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::InadmissiblePattern: return "InadmissiblePattern";
    case ErrorCode::NonGenericParameter: return "NonGenericParameter";
    case ErrorCode::RankError: return "RankError";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::NonCompactCurve: return "NonCompactCurve";
    case ErrorCode::NonCompactDivisor: return "NonCompactDivisor";
    case ErrorCode::EmptyInterior: return "EmptyInterior";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::FanConsistency: return "FanConsistency";
    case ErrorCode::WallAmbiguity: return "WallAmbiguity";
    case ErrorCode::TopologyMismatch: return "TopologyMismatch";
    case ErrorCode::GeometryMismatch: return "GeometryMismatch";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvariantViolation:
    case ErrorCode::FanConsistency:
    case ErrorCode::WallAmbiguity:
    case ErrorCode::TopologyMismatch:
    case ErrorCode::GeometryMismatch:
    case ErrorCode::DegreeViolation:
      return 2;
    default:
      return 1;
  }
}

void fail(ErrorCode c, const std::string& msg) { throw DimodError(c, msg); }

void check(bool cond, ErrorCode c, const std::string& msg) {
  if (!cond) fail(c, msg);
}

}  // namespace dimod
