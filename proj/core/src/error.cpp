#include "pgxrag/error.hpp"

namespace pgxrag {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::DuplicateDocId: return "DuplicateDocId";
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::ZeroEmbedding: return "ZeroEmbedding";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BackendUnavailable: return "BackendUnavailable";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::DuplicateChunkId: return "DuplicateChunkId";
    case ErrorCode::CorruptIndex: return "CorruptIndex";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::MissingBinding: return "MissingBinding";
    case ErrorCode::UnknownPlaceholder: return "UnknownPlaceholder";
    case ErrorCode::EmptyChunk: return "EmptyChunk";
    case ErrorCode::NoSummaries: return "NoSummaries";
    case ErrorCode::ConfigMismatch: return "ConfigMismatch";
    case ErrorCode::CassetteMiss: return "CassetteMiss";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::UndefinedMetric: return "UndefinedMetric";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::NoPairs: return "NoPairs";
    case ErrorCode::AllZeroDifferences: return "AllZeroDifferences";
    case ErrorCode::UnknownItem: return "UnknownItem";
    case ErrorCode::DuplicateAnswer: return "DuplicateAnswer";
    case ErrorCode::InvalidChoice: return "InvalidChoice";
    case ErrorCode::DuplicateSubmission: return "DuplicateSubmission";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error::Error(ErrorCode code, std::string stage, const std::string& message)
    : std::runtime_error("[" + stage + "] " + message), code_(code), stage_(std::move(stage)) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace pgxrag
