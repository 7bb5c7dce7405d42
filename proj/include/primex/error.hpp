#pragma once

#include <stdexcept>
#include <string>

namespace primex {

// Every failure mode carries one of these codes so callers (and the CLI)
// can react without string matching.
enum class ErrorCode {
  Parse,         // malformed input text
  Domain,        // argument outside the operation's domain (degree mismatch, bad point, ...)
  Precondition,  // structural precondition not met (not solvable, not primitive, not normal, ...)
  Guard,         // size guard exceeded
  Precision,     // 2-adic working precision exhausted
  Defect,        // internal consistency check failed; indicates a bug, never expected
};

inline const char *error_code_name(ErrorCode c)
{
  switch (c) {
  case ErrorCode::Parse:        return "PARSE";
  case ErrorCode::Domain:       return "DOMAIN";
  case ErrorCode::Precondition: return "PRECONDITION";
  case ErrorCode::Guard:        return "GUARD";
  case ErrorCode::Precision:    return "PRECISION";
  case ErrorCode::Defect:       return "DEFECT";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string const &msg)
    : std::runtime_error(msg), _code(code) {}

  ErrorCode code() const { return _code; }
  const char *code_name() const { return error_code_name(_code); }

private:
  ErrorCode _code;
};

[[noreturn]] inline void fail(ErrorCode code, std::string const &msg)
{
  throw Error(code, msg);
}

} // namespace primex
