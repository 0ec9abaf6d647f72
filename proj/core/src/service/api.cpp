#include "pgxrag/service/api.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/evaluation/report.hpp"
#include "pgxrag/service/manifest.hpp"
#include "pgxrag/text.hpp"

namespace pgxrag {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ApiResponse json_response(int status, const std::string& body) { return {status, body, "application/json"}; }

ApiResponse error_response(int status, std::string_view code, const std::string& message) {
  ordered_json j = {{"error", code}, {"message", message}};
  return json_response(status, j.dump());
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto t = std::string(text::trim(part));
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

bool valid_group_name(const std::string& g) {
  if (g.empty()) return false;
  return std::all_of(g.begin(), g.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '-' || c == '_' || c == '.';
  }) && g.front() != '.';
}

ordered_json read_jsonl(const std::filesystem::path& path) {
  ordered_json arr = ordered_json::array();
  std::ifstream in(path, std::ios::binary);
  std::string line;
  while (std::getline(in, line)) {
    if (!text::trim(line).empty()) arr.push_back(ordered_json::parse(line));
  }
  return arr;
}

}  // namespace

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::MalformedRecord:
    case ErrorCode::EmptyText:
    case ErrorCode::ZeroEmbedding:
    case ErrorCode::ConfigMismatch:
    case ErrorCode::InvalidChoice:
    case ErrorCode::DuplicateAnswer:
    case ErrorCode::UndefinedMetric:
    case ErrorCode::EmptyGroup:
    case ErrorCode::NoPairs:
    case ErrorCode::AllZeroDifferences:
      return 400;
    case ErrorCode::NotFound:
    case ErrorCode::UnknownGroup:
    case ErrorCode::UnknownItem:
      return 404;
    case ErrorCode::DuplicateSubmission:
      return 409;
    case ErrorCode::BackendUnavailable:
    case ErrorCode::CassetteMiss:
      return 503;
    default:
      return 500;
  }
}

ServiceApi::ServiceApi(const Engine& engine, std::filesystem::path store_dir)
    : engine_(engine), store_dir_(std::move(store_dir)), annotations_(store_dir_ / "annotations.jsonl") {
  std::filesystem::create_directories(store_dir_);
  if (auto p = store_dir_ / "dataset.jsonl"; std::filesystem::exists(p)) dataset_ = load_dataset(p);
  if (auto p = store_dir_ / "quiz.json"; std::filesystem::exists(p)) quiz_ = load_quiz(p);
}

ApiResponse ServiceApi::handle(const ApiRequest& req) {
  try {
    const auto& path = req.path;
    bool get = req.method == "GET";
    bool post = req.method == "POST";
    if (path == "/api/health" && get) return health();
    if (path == "/api/query" && post) return query(req);
    if (path == "/api/dataset" && get) return dataset();
    if (path == "/api/responses" && get) return responses(req);
    if (path == "/api/annotations" && post) return post_annotation(req);
    if (path == "/api/metrics" && get) return metrics(req);
    if (path == "/api/quiz" && get) return quiz();
    if (path == "/api/quiz/answers" && post) return post_quiz_answers(req);
    static const std::set<std::string> known = {"/api/health", "/api/query",  "/api/dataset",
                                                "/api/responses", "/api/annotations", "/api/metrics",
                                                "/api/quiz", "/api/quiz/answers"};
    if (known.contains(path)) return error_response(405, "MethodNotAllowed", req.method + " " + path);
    return error_response(404, "NotFound", "no endpoint " + path);
  } catch (const Error& e) {
    return error_response(http_status(e.code()), e.code_name(), e.what());
  } catch (const json::exception& e) {
    return error_response(400, "MalformedRecord", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "InternalError", e.what());
  }
}

ApiResponse ServiceApi::health() const {
  ordered_json phases = ordered_json::array();
  for (auto p : {Phase::Phase1, Phase::Phase2, Phase::Phase3})
    if (engine_.supports(p)) phases.push_back(to_string(p));
  ordered_json j = {{"status", "ok"},
                    {"version", tool_version()},
                    {"phases", phases},
                    {"embedder", engine_.embedder().tag()},
                    {"generator", engine_.generator().tag()}};
  return json_response(200, j.dump());
}

ApiResponse ServiceApi::query(const ApiRequest& req) const {
  json body;
  try {
    body = json::parse(req.body);
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedRecord, std::string("invalid JSON: ") + e.what());
  }
  if (!body.is_object() || !body.contains("text") || !body["text"].is_string())
    fail(ErrorCode::MalformedRecord, "body must hold a string 'text'");
  auto text = body["text"].get<std::string>();
  if (text::trim(text).empty()) fail(ErrorCode::MalformedRecord, "query text is empty");
  Phase phase = Phase::Phase1;
  if (body.contains("phase")) {
    const auto& p = body["phase"];
    if (p.is_number_integer()) {
      phase = parse_phase(std::to_string(p.get<int>()));
    } else if (p.is_string()) {
      phase = parse_phase(p.get<std::string>());
    } else {
      fail(ErrorCode::MalformedRecord, "phase must be 1, 2, 3 or 'phaseN'");
    }
  }
  auto query_id = body.value("query_id", std::string("adhoc"));
  return json_response(200, to_json(engine_.ask(query_id, text, phase)));
}

ApiResponse ServiceApi::dataset() const {
  ordered_json arr = ordered_json::array();
  for (const auto& r : dataset_) arr.push_back(ordered_json::parse(to_json_line(r)));
  return json_response(200, arr.dump());
}

std::vector<std::string> ServiceApi::response_groups() const {
  std::vector<std::string> out;
  auto dir = store_dir_ / "responses";
  if (!std::filesystem::is_directory(dir)) return out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".jsonl") out.push_back(e.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ApiResponse ServiceApi::responses(const ApiRequest& req) const {
  auto it = req.params.find("group");
  if (it == req.params.end() || it->second.empty()) {
    ordered_json j = {{"groups", response_groups()}};
    return json_response(200, j.dump());
  }
  if (!valid_group_name(it->second)) fail(ErrorCode::InvalidArgument, "bad group name '" + it->second + "'");
  auto path = store_dir_ / "responses" / (it->second + ".jsonl");
  if (!std::filesystem::exists(path)) fail(ErrorCode::UnknownGroup, "no responses for group '" + it->second + "'");
  return json_response(200, read_jsonl(path).dump());
}

std::optional<std::vector<std::string>> ServiceApi::known_query_ids(const std::string& group) const {
  if (valid_group_name(group)) {
    auto path = store_dir_ / "responses" / (group + ".jsonl");
    if (std::filesystem::exists(path)) {
      std::vector<std::string> ids;
      for (const auto& r : read_jsonl(path)) ids.push_back(r.at("query_id").get<std::string>());
      return ids;
    }
  }
  if (!dataset_.empty()) {
    std::vector<std::string> ids;
    for (const auto& r : dataset_) ids.push_back(r.query_id);
    return ids;
  }
  return std::nullopt;
}

ApiResponse ServiceApi::post_annotation(const ApiRequest& req) {
  auto record = parse_annotation(req.body);
  if (!valid_group_name(record.response_ref.group))
    fail(ErrorCode::MalformedRecord, "bad group name '" + record.response_ref.group + "'");
  if (auto ids = known_query_ids(record.response_ref.group)) {
    if (std::find(ids->begin(), ids->end(), record.response_ref.query_id) == ids->end())
      fail(ErrorCode::NotFound, "unknown response " + record.response_ref.query_id + " in group " +
                                    record.response_ref.group);
  }
  if (record.timestamp.empty()) record.timestamp = utc_now_iso8601();

  std::string token;
  if (auto h = req.headers.find("x-submission-token"); h != req.headers.end()) token = h->second;
  auto body = json::parse(req.body);
  if (body.contains("submission_token") && body["submission_token"].is_string())
    token = body["submission_token"].get<std::string>();

  auto stored = annotations_.append(std::move(record), token);
  return json_response(200, to_json_line(stored));
}

std::map<std::string, QuizResult> ServiceApi::latest_quiz_results() const {
  std::map<std::string, QuizResult> out;
  auto path = store_dir_ / "quiz_results.jsonl";
  if (quiz_.empty() || !std::filesystem::exists(path)) return out;
  std::lock_guard lock(quiz_mutex_);
  for (const auto& rec : read_jsonl(path)) {
    QuizAnswers answers;
    for (auto it = rec.at("answers").begin(); it != rec.at("answers").end(); ++it)
      answers.emplace_back(it.key(), it.value().get<int>());
    out[rec.at("group").get<std::string>()] = score_quiz(answers, quiz_);
  }
  return out;
}

ApiResponse ServiceApi::metrics(const ApiRequest& req) const {
  auto records = annotations_.records();
  std::vector<std::string> groups;
  if (auto it = req.params.find("groups"); it != req.params.end()) groups = split_csv(it->second);
  if (groups.empty()) {
    auto all = annotations_.groups();
    groups.assign(all.begin(), all.end());
  }
  std::vector<WilcoxonSpec> specs;
  if (auto it = req.params.find("tests"); it != req.params.end()) {
    std::string metric = "accuracy";
    if (auto m = req.params.find("metric"); m != req.params.end()) metric = m->second;
    Alternative alt = Alternative::Greater;
    if (auto a = req.params.find("alternative"); a != req.params.end()) alt = parse_alternative(a->second);
    for (const auto& t : split_csv(it->second)) {
      auto colon = t.find(':');
      if (colon == std::string::npos) fail(ErrorCode::InvalidArgument, "tests entries look like a:b, got '" + t + "'");
      specs.push_back({t.substr(0, colon), t.substr(colon + 1), metric, alt});
    }
  }
  auto quiz = latest_quiz_results();
  auto report = build_comparison(groups, records, quiz, specs);
  return json_response(200, to_json(report, -1));
}

ApiResponse ServiceApi::quiz() const {
  if (quiz_.empty()) fail(ErrorCode::NotFound, "no quiz loaded");
  ordered_json arr = ordered_json::array();
  for (const auto& item : quiz_)
    arr.push_back({{"item_id", item.item_id}, {"stem", item.stem}, {"choices", item.choices}});
  return json_response(200, arr.dump());
}

ApiResponse ServiceApi::post_quiz_answers(const ApiRequest& req) {
  if (quiz_.empty()) fail(ErrorCode::NotFound, "no quiz loaded");
  std::string group = "default";
  if (auto it = req.params.find("group"); it != req.params.end() && !it->second.empty()) group = it->second;
  if (!valid_group_name(group)) fail(ErrorCode::InvalidArgument, "bad group name '" + group + "'");
  auto answers = parse_answers(req.body);
  auto result = score_quiz(answers, quiz_);

  ordered_json amap = ordered_json::object();
  for (const auto& [id, c] : answers) amap[id] = c;
  ordered_json rec = {{"group", group}, {"answers", amap}, {"timestamp", utc_now_iso8601()}};
  {
    std::lock_guard lock(quiz_mutex_);
    std::ofstream out(store_dir_ / "quiz_results.jsonl", std::ios::binary | std::ios::app);
    if (!out) fail(ErrorCode::IoFailure, "cannot append quiz result");
    out << rec.dump() << '\n';
    out.flush();
  }

  ordered_json items = ordered_json::array();
  for (const auto& o : result.items) {
    items.push_back({{"item_id", o.item_id},
                     {"selected", o.selected ? ordered_json(*o.selected) : ordered_json(nullptr)},
                     {"correct", o.correct}});
  }
  ordered_json j = {{"group", group},
                    {"correct", result.correct_count},
                    {"total", result.total},
                    {"accuracy", result.accuracy},
                    {"items", items}};
  return json_response(200, j.dump());
}

}  // namespace pgxrag
