#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgxrag {

// Error classes are part of the CLI contract: the name printed on stderr is
// to_string(code()).
enum class ErrorCode {
  InvalidArgument,
  MissingFile,
  IoFailure,
  MalformedRecord,
  DuplicateDocId,
  EmptyDocument,
  EmptyText,
  ZeroEmbedding,
  NotNormalized,
  DimensionMismatch,
  BackendUnavailable,
  EmptyCorpus,
  DuplicateChunkId,
  CorruptIndex,
  VersionMismatch,
  MissingBinding,
  UnknownPlaceholder,
  EmptyChunk,
  NoSummaries,
  ConfigMismatch,
  CassetteMiss,
  NotFound,
  UndefinedMetric,
  EmptyGroup,
  GroupMismatch,
  UnknownGroup,
  NoPairs,
  AllZeroDifferences,
  UnknownItem,
  DuplicateAnswer,
  InvalidChoice,
  DuplicateSubmission,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, std::string stage, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const noexcept { return to_string(code_); }

  // Pipeline stage that raised the error ("embed", "search", ...); empty
  // outside the pipeline.
  const std::string& stage() const noexcept { return stage_; }

 private:
  ErrorCode code_;
  std::string stage_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace pgxrag
