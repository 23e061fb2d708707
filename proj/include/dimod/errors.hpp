#pragma once
#include <stdexcept>
#include <string>

namespace dimod {

enum class ErrorCode {
  NotBipartite,
  UnivalentNode,
  NotTorusCellular,
  Disconnected,
  InvalidModel,
  NoPerfectMatching,
  DegenerateModel,
  DegeneratePolygon,
  InadmissiblePattern,
  NonGenericParameter,
  RankError,
  Unreachable,
  NonCompactCurve,
  NonCompactDivisor,
  EmptyInterior,
  BudgetExceeded,
  UnknownModel,
  InvariantViolation,
  FanConsistency,
  WallAmbiguity,
  TopologyMismatch,
  GeometryMismatch,
  DegreeViolation,
};

const char* code_name(ErrorCode c);

// Process exit code: 1 for rejected input or unsatisfiable request, 2 when an
// internal structural invariant failed (the computation itself is suspect).
int exit_code_for(ErrorCode c);

class DimodError : public std::runtime_error {
public:
  DimodError(ErrorCode c, const std::string& msg)
      : std::runtime_error(msg), code_(c) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode c, const std::string& msg);
void check(bool cond, ErrorCode c, const std::string& msg);

}  // namespace dimod
