// pgxrag command-line driver.

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <pthread.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgxrag/corpus.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/evaluation/annotation.hpp"
#include "pgxrag/evaluation/dataset.hpp"
#include "pgxrag/evaluation/quiz.hpp"
#include "pgxrag/evaluation/report.hpp"
#include "pgxrag/evaluation/wilcoxon.hpp"
#include "pgxrag/knowledge_base.hpp"
#include "pgxrag/service/api.hpp"
#include "pgxrag/service/batch.hpp"
#include "pgxrag/service/config.hpp"
#include "pgxrag/service/engine.hpp"
#include "pgxrag/service/http_server.hpp"
#include "pgxrag/service/manifest.hpp"
#include "pgxrag/vector_index.hpp"

namespace {

using namespace pgxrag;
using nlohmann::ordered_json;

struct BackendOptions {
  std::string config_path;
  std::string backend;
  std::string cassette;
  std::string record;
  std::string model;
  std::string endpoint;
  unsigned threads = 0;

  void add_to(CLI::App* app) {
    app->add_option("--config", config_path, "JSON config file");
    app->add_option("--backend", backend, "Generation backend")
        ->check(CLI::IsMember({"offline", "remote", "cassette"}));
    app->add_option("--cassette", cassette, "Cassette file for --backend cassette");
    app->add_option("--record", record, "Append remote exchanges to this cassette");
    app->add_option("--model", model, "Chat model for remote/cassette backends");
    app->add_option("--endpoint", endpoint, "Base URL of an OpenAI-compatible API");
    app->add_option("--threads", threads, "Worker threads");
  }

  ServiceConfig resolve() const {
    auto c = config_path.empty() ? ServiceConfig{} : ServiceConfig::load(config_path);
    c.apply_environment();
    if (!backend.empty()) c.generator = backend;
    if (!cassette.empty()) c.cassette_path = cassette;
    if (!record.empty()) c.record_path = record;
    if (!model.empty()) c.generation_model = model;
    if (!endpoint.empty()) c.generation_endpoint = endpoint;
    if (threads) c.threads = threads;
    return c;
  }
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::vector<AnnotationRecord> load_all_annotations(const std::vector<std::string>& paths) {
  std::map<std::tuple<std::string, std::string, std::string>, AnnotationRecord> merged;
  for (const auto& p : paths) {
    for (auto& r : load_annotations(p))
      merged[{r.response_ref.query_id, r.response_ref.group, r.annotator_id}] = std::move(r);
  }
  std::vector<AnnotationRecord> out;
  for (auto& [k, r] : merged) out.push_back(std::move(r));
  return out;
}

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

int cmd_ingest(const std::string& corpus, const std::string& sources, const std::string& out,
               std::size_t max_tokens, const BackendOptions& opts) {
  auto config = opts.resolve();
  auto load = load_corpus(corpus, parse_source_list(sources));
  auto kb = KnowledgeBase::from_documents(load.documents, max_tokens);
  auto embedder = make_embedder(config);
  auto chunks = kb.plain_chunks();
  auto index = build_index(chunks, *embedder, config.threads);
  persist_index(index, out);
  kb.save(chunk_store_path(out));
  std::cout << "indexed " << index.size() << " chunks from " << load.documents.size() << " documents";
  if (load.excluded) std::cout << " (" << load.excluded << " excluded by source filter)";
  std::cout << " -> " << out << "\n";
  return 0;
}

int cmd_ask(const std::string& question, const std::string& phase_text, const std::vector<std::string>& indexes,
            bool as_json, const BackendOptions& opts) {
  auto phase = parse_phase(phase_text);
  Engine engine(opts.resolve(), {indexes.begin(), indexes.end()});
  auto r = engine.ask("adhoc", question, phase);
  if (as_json) {
    std::cout << to_json(r) << "\n";
    return 0;
  }
  std::cout << r.answer << "\n\n";
  std::cout << "phase: " << to_string(r.phase) << "  backend: " << r.backend_tag
            << "  context_tokens: " << r.context_tokens << "\n";
  std::cout << "trace_hash: " << r.trace_hash << "\n";
  std::cout << "hits:\n";
  for (std::size_t i = 0; i < r.hits.size(); ++i) {
    const auto& h = r.hits[i];
    char score[32];
    std::snprintf(score, sizeof score, "%.6f", h.score);
    std::string by;
    for (const auto& b : h.retrieved_by) by += (by.empty() ? "" : ",") + b;
    std::cout << "  " << i + 1 << ". " << h.chunk_id << "  score=" << score << "  [" << by << "]\n";
  }
  if (!r.budget_dropped.empty()) {
    std::cout << "dropped by budget:";
    for (const auto& id : r.budget_dropped) std::cout << " " << id;
    std::cout << "\n";
  }
  return 0;
}

int cmd_eval_run(const std::string& dataset_path, const std::string& phase_text, const std::string& out,
                 const std::vector<std::string>& indexes, const std::string& group, const BackendOptions& opts) {
  auto phase = parse_phase(phase_text);
  auto dataset = load_dataset(dataset_path);
  Engine engine(opts.resolve(), {indexes.begin(), indexes.end()});
  auto report = validate_dataset(dataset, engine.lexicon());
  if (!report.conformant)
    std::cerr << "warning: dataset is not 26x10 conformant (" << report.violations.size() << " violations)\n";
  auto result = run_batch(engine, dataset, phase, out, group);
  std::cout << "wrote " << result.responses << " responses to " << out << " (manifest "
            << result.manifest.digest() << ")\n";
  return 0;
}

int cmd_eval_validate(const std::string& dataset_path, const BackendOptions& opts) {
  auto config = opts.resolve();
  auto lexicon = GuidelineLexicon::load(config.lexicon());
  auto records = load_dataset(dataset_path);
  auto report = validate_dataset(records, lexicon);
  ordered_json counts = ordered_json::object();
  for (const auto& c : report.counts) counts[c.guideline_key] = c.count;
  ordered_json j = {{"conformant", report.conformant},
                    {"total", report.total},
                    {"counts", counts},
                    {"violating_guidelines", report.violating_guidelines},
                    {"unknown_keys", report.unknown_keys},
                    {"duplicate_ids", report.duplicate_ids},
                    {"violations", report.violations}};
  std::cout << j.dump(2) << "\n";
  if (!report.conformant)
    throw Error(ErrorCode::InvalidArgument, "dataset is not conformant: " + std::to_string(report.violations.size()) +
                                                " violations");
  return 0;
}

int cmd_eval_metrics(const std::vector<std::string>& annotation_files, const std::string& groups_csv,
                     const std::string& report_path, const std::vector<std::string>& tests,
                     const std::string& metric, const std::string& alternative, const std::string& quiz_items,
                     const std::vector<std::string>& quiz_answers) {
  auto records = load_all_annotations(annotation_files);
  auto groups = split_csv(groups_csv);
  if (groups.empty()) {
    std::set<std::string> all;
    for (const auto& r : records) all.insert(r.response_ref.group);
    groups.assign(all.begin(), all.end());
  }
  std::vector<WilcoxonSpec> specs;
  for (const auto& t : tests) {
    auto colon = t.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--wilcoxon expects a:b, got " + t);
    specs.push_back({t.substr(0, colon), t.substr(colon + 1), metric, parse_alternative(alternative)});
  }
  std::map<std::string, QuizResult> quiz;
  if (!quiz_answers.empty()) {
    if (quiz_items.empty()) throw Error(ErrorCode::InvalidArgument, "--quiz-answers needs --quiz-items");
    auto key = load_quiz(quiz_items);
    for (const auto& qa : quiz_answers) {
      auto eq = qa.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--quiz-answers expects group=file");
      quiz[qa.substr(0, eq)] = score_quiz(load_answers(qa.substr(eq + 1)), key);
    }
  }
  auto report = build_comparison(groups, records, quiz, specs);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write " + report_path);
    out << to_json(report) << "\n";
  }
  std::cout << render_table(report);
  return 0;
}

int cmd_eval_wilcoxon(const std::vector<std::string>& annotation_files, const std::string& a, const std::string& b,
                      const std::string& metric, const std::string& alternative, const std::string& method) {
  auto records = load_all_annotations(annotation_files);
  WilcoxonSpec spec{a, b, metric, parse_alternative(alternative)};
  auto pc = run_paired_test(records, spec, kDefaultAlpha, parse_method_choice(method));
  ordered_json j = {{"a_group", a},
                    {"b_group", b},
                    {"metric", metric},
                    {"alternative", to_string(spec.alternative)},
                    {"n_input", pc.result.n_input},
                    {"n_effective", pc.result.n_effective},
                    {"w_statistic", pc.result.w_statistic},
                    {"w_plus", pc.result.w_plus},
                    {"w_minus", pc.result.w_minus},
                    {"p_value", pc.result.p_value},
                    {"method", to_string(pc.result.method)},
                    {"significant", pc.significant}};
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_quiz_score(const std::string& items, const std::string& answers, bool as_json) {
  auto key = load_quiz(items);
  auto result = score_quiz(load_answers(answers), key);
  if (as_json) {
    ordered_json per = ordered_json::array();
    for (const auto& o : result.items)
      per.push_back({{"item_id", o.item_id},
                     {"selected", o.selected ? ordered_json(*o.selected) : ordered_json(nullptr)},
                     {"correct", o.correct}});
    ordered_json j = {{"correct", result.correct_count},
                      {"total", result.total},
                      {"accuracy", result.accuracy},
                      {"items", per}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  char line[64];
  std::snprintf(line, sizeof line, "%zu/%zu correct, accuracy %.2f\n", result.correct_count, result.total,
                result.accuracy);
  std::cout << line;
  return 0;
}

int cmd_serve(const std::string& host, int port, const std::vector<std::string>& indexes, const std::string& store,
              const BackendOptions& opts) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  Engine engine(opts.resolve(), {indexes.begin(), indexes.end()});
  ServiceApi api(engine, store);
  HttpServer server(api);
  int bound = server.bind(host, port);
  std::cout << "listening on http://" << host << ":" << bound << std::endl;

  std::jthread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.listen();
  pthread_kill(waiter.native_handle(), SIGTERM);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pharmacogenomics retrieval-augmented QA and evaluation toolkit"};
  app.set_version_flag("--version", std::string(pgxrag::tool_version()));
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Chunk, embed and index a corpus");
  std::string corpus, sources = "CPIC", index_out;
  std::size_t max_tokens = pgxrag::kDefaultMaxChunkTokens;
  BackendOptions ingest_opts;
  ingest->add_option("--corpus", corpus, "Corpus JSONL file or directory")->required();
  ingest->add_option("--sources", sources, "Sources to keep, e.g. CPIC,PharmGKB");
  ingest->add_option("--out", index_out, "Index file to write")->required();
  ingest->add_option("--max-chunk-tokens", max_tokens, "Chunk budget in whitespace tokens");
  ingest_opts.add_to(ingest);

  // ask
  auto* ask = app.add_subcommand("ask", "Answer one question");
  std::string question, phase = "1";
  std::vector<std::string> indexes;
  bool ask_json = false;
  BackendOptions ask_opts;
  ask->add_option("question", question, "Question text")->required();
  ask->add_option("--phase", phase, "1, 2 or 3");
  ask->add_option("--index", indexes, "Index file (repeatable)")->required();
  ask->add_flag("--json", ask_json, "Print the full response as JSON");
  ask_opts.add_to(ask);

  // eval
  auto* eval = app.add_subcommand("eval", "Batch runs and metrics");
  eval->require_subcommand(1);

  auto* run = eval->add_subcommand("run", "Answer every query in a dataset");
  std::string dataset, run_out, run_phase = "1", group;
  std::vector<std::string> run_indexes;
  BackendOptions run_opts;
  run->add_option("--dataset", dataset, "Query dataset (JSONL)")->required();
  run->add_option("--phase", run_phase, "1, 2 or 3");
  run->add_option("--out", run_out, "Responses file")->required();
  run->add_option("--index", run_indexes, "Index file (repeatable)")->required();
  run->add_option("--group", group, "Group tag (default: phase name)");
  run_opts.add_to(run);

  auto* validate = eval->add_subcommand("validate", "Check dataset structure");
  std::string validate_dataset_path;
  BackendOptions validate_opts;
  validate->add_option("--dataset", validate_dataset_path, "Query dataset (JSONL)")->required();
  validate_opts.add_to(validate);

  auto* metrics = eval->add_subcommand("metrics", "Aggregate annotations into a comparison report");
  std::vector<std::string> annotation_files, tests, quiz_answer_files;
  std::string groups, report_path, metric = "accuracy", alternative = "greater", quiz_items;
  metrics->add_option("--annotations", annotation_files, "Annotation JSONL (repeatable)")->required();
  metrics->add_option("--groups", groups, "Comma-separated groups (default: all)");
  metrics->add_option("--report", report_path, "Write the JSON report here");
  metrics->add_option("--wilcoxon", tests, "Paired test a:b (repeatable)");
  metrics->add_option("--metric", metric, "Metric for paired tests");
  metrics->add_option("--alternative", alternative, "greater or less");
  metrics->add_option("--quiz-items", quiz_items, "Quiz key");
  metrics->add_option("--quiz-answers", quiz_answer_files, "group=answers.json (repeatable)");

  auto* wilcoxon = eval->add_subcommand("wilcoxon", "One-tailed signed-rank test between two groups");
  std::vector<std::string> w_files;
  std::string w_a, w_b, w_metric = "accuracy", w_alt = "greater", w_method = "auto";
  wilcoxon->add_option("--annotations", w_files, "Annotation JSONL (repeatable)")->required();
  wilcoxon->add_option("--a", w_a, "First group")->required();
  wilcoxon->add_option("--b", w_b, "Second group")->required();
  wilcoxon->add_option("--metric", w_metric, "Metric");
  wilcoxon->add_option("--alternative", w_alt, "greater or less");
  wilcoxon->add_option("--method", w_method, "auto, exact or normal");

  // quiz
  auto* quiz = app.add_subcommand("quiz", "Quiz scoring");
  quiz->require_subcommand(1);
  auto* score = quiz->add_subcommand("score", "Score an answer sheet");
  std::string items, answers;
  bool quiz_json = false;
  score->add_option("--items", items, "Quiz key (JSON array)")->required();
  score->add_option("--answers", answers, "Answers (JSON object item_id -> choice)")->required();
  score->add_flag("--json", quiz_json, "Print JSON");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  std::string host = "127.0.0.1", store;
  int port = 8080;
  std::vector<std::string> serve_indexes;
  BackendOptions serve_opts;
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port (0 picks a free one)");
  serve->add_option("--index", serve_indexes, "Index file (repeatable)")->required();
  serve->add_option("--store", store, "Store directory")->required();
  serve_opts.add_to(serve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error=InvalidArgument " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    if (*ingest) return cmd_ingest(corpus, sources, index_out, max_tokens, ingest_opts);
    if (*ask) return cmd_ask(question, phase, indexes, ask_json, ask_opts);
    if (*run) return cmd_eval_run(dataset, run_phase, run_out, run_indexes, group, run_opts);
    if (*validate) return cmd_eval_validate(validate_dataset_path, validate_opts);
    if (*metrics)
      return cmd_eval_metrics(annotation_files, groups, report_path, tests, metric, alternative, quiz_items,
                              quiz_answer_files);
    if (*wilcoxon) return cmd_eval_wilcoxon(w_files, w_a, w_b, w_metric, w_alt, w_method);
    if (*score) return cmd_quiz_score(items, answers, quiz_json);
    if (*serve) return cmd_serve(host, port, serve_indexes, store, serve_opts);
  } catch (const pgxrag::Error& e) {
    std::cerr << "error=" << e.code_name();
    if (!e.stage().empty()) std::cerr << " stage=" << e.stage();
    std::cerr << " " << one_line(e.what()) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error=InternalError " << one_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}
