#pragma once

#include <stdexcept>
#include <string>

namespace rlc {

enum class ErrorCode {
  invalid_argument,
  infeasible_spec,
  attempts_exhausted,
  budget_exceeded,
  equal_vertices,
  out_of_universe,
  subset_too_small,
  not_power_of_two,
  chain_too_short,
  universe_too_large,
  depth_exceeded,
  format_error,
  io_error,
  unsupported,
  internal,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::infeasible_spec: return "infeasible_spec";
    case ErrorCode::attempts_exhausted: return "attempts_exhausted";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::equal_vertices: return "equal_vertices";
    case ErrorCode::out_of_universe: return "out_of_universe";
    case ErrorCode::subset_too_small: return "subset_too_small";
    case ErrorCode::not_power_of_two: return "not_power_of_two";
    case ErrorCode::chain_too_short: return "chain_too_short";
    case ErrorCode::universe_too_large: return "universe_too_large";
    case ErrorCode::depth_exceeded: return "depth_exceeded";
    case ErrorCode::format_error: return "format_error";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace rlc
