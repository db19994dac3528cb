// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace sympdesc {

enum class ErrorCode {
  Ok = 0,
  InvalidArgument,
  Parse,
  NotInvertible,
  SizeMismatch,
  NoSpecialArrangement,
  OddMultiplicity,
  OddTotal,
  LengthMismatch,
  NotDominant,
  RankMismatch,
  CaseGap,
  NotAPartition,
  InvalidShape,
  Branching,
  Io,
  Internal,
};

// Stable lowercase name, e.g. "not_invertible".
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sympdesc
