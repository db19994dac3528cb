// SPDX-License-Identifier: MIT
#include "sympdesc/errors.hpp"

namespace sympdesc {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "ok";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::NotInvertible: return "not_invertible";
    case ErrorCode::SizeMismatch: return "size_mismatch";
    case ErrorCode::NoSpecialArrangement: return "no_special_arrangement";
    case ErrorCode::OddMultiplicity: return "odd_multiplicity";
    case ErrorCode::OddTotal: return "odd_total";
    case ErrorCode::LengthMismatch: return "length_mismatch";
    case ErrorCode::NotDominant: return "not_dominant";
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::CaseGap: return "case_gap";
    case ErrorCode::NotAPartition: return "not_a_partition";
    case ErrorCode::InvalidShape: return "invalid_shape";
    case ErrorCode::Branching: return "branching";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace sympdesc
