// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The profgraph Authors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace profgraph {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  EmptyDocument,
  DegenerateCorpus,
  DuplicateProfileId,
  UnknownProfile,
  EmptyCandidates,
  QueryAmongCandidates,
  Exhausted,
  BadOrder,
  TraceIndexMismatch,
  ReportTraceMismatch,
  UnknownNode,
  NoPath,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace profgraph
