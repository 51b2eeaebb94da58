#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace pairrank {

// Machine-readable error taxonomy surfaced through the CLI and JSON reports.
enum class ErrorCode {
  ZeroDenominator,
  UnknownVariable,
  PoleAtPoint,
  ResourceLimit,
  MissingParametrization,
  UnsupportedClass,
  UnknownConnectedness,
  VerificationFailed,
  DimMismatch,
  NegativeRank,
  SyntaxError,
  NameError,
  TypeError,
  Internal,
};

const char* error_code_name(ErrorCode c);

struct SourcePos {
  int line = 0;
  int col = 0;
};

class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  EngineError(ErrorCode code, std::string message, SourcePos pos)
      : std::runtime_error(std::move(message)), code_(code), pos_(pos) {}

  ErrorCode code() const { return code_; }
  const std::optional<SourcePos>& pos() const { return pos_; }

 private:
  ErrorCode code_;
  std::optional<SourcePos> pos_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw EngineError(code, msg);
}

}  // namespace pairrank
