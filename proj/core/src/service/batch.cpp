#include "pgxrag/service/batch.hpp"

#include <fstream>

#include "json.hpp"
#include "pgxrag/error.hpp"

namespace pgxrag {

std::string batch_line(const PipelineResponse& response, const std::string& group,
                       const std::string& manifest_digest) {
  auto j = nlohmann::ordered_json::parse(to_json(response));
  j["group"] = group;
  j["manifest_digest"] = manifest_digest;
  return j.dump();
}

BatchResult run_batch(const Engine& engine, std::span<const QueryRecord> dataset, Phase phase,
                      const std::filesystem::path& output, std::string group) {
  const auto& pipeline = engine.pipeline(phase);
  const auto& loaded = engine.index_for(phase);

  BatchResult result;
  result.output = output;
  result.manifest_path = output.string() + ".manifest.json";
  auto& m = result.manifest;
  m.tool_version = std::string(tool_version());
  m.phase = pipeline.config();
  m.group = group.empty() ? std::string(to_string(phase)) : std::move(group);
  m.embedder_tag = engine.embedder().tag();
  m.generator_tag = engine.generator().tag();
  m.backends = engine.config().describe_json();
  m.template_digest = engine.templates().digest();
  m.corpus_digest = loaded.kb.digest();
  m.dataset_digest = dataset_digest(dataset);
  m.started_at = utc_now_iso8601();
  auto digest = m.digest();

  if (output.has_parent_path()) std::filesystem::create_directories(output.parent_path());
  auto tmp = output;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoFailure, "cannot write " + tmp.string());
    for (const auto& q : dataset) {
      auto response = pipeline.answer(q.query_id, q.text);
      out << batch_line(response, m.group, digest) << '\n';
      ++result.responses;
    }
    out.flush();
    if (!out) fail(ErrorCode::IoFailure, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, output);

  m.finished_at = utc_now_iso8601();
  std::ofstream mf(result.manifest_path, std::ios::binary | std::ios::trunc);
  if (!mf) fail(ErrorCode::IoFailure, "cannot write " + result.manifest_path.string());
  mf << m.to_json() << '\n';
  return result;
}

}  // namespace pgxrag
