// Acceptance suite: one pass/fail line per criterion, each under its own
// wall-clock limit. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"
#include "oracles.hpp"
#include "pgxrag/error.hpp"
#include "pgxrag/evaluation/annotation.hpp"
#include "pgxrag/evaluation/dataset.hpp"
#include "pgxrag/evaluation/metrics.hpp"
#include "pgxrag/evaluation/quiz.hpp"
#include "pgxrag/evaluation/wilcoxon.hpp"
#include "pgxrag/knowledge_base.hpp"
#include "pgxrag/lexicon.hpp"
#include "pgxrag/pipeline.hpp"
#include "pgxrag/prompt_template.hpp"
#include "pgxrag/vector_index.hpp"
#include "test_support.hpp"

using namespace pgxrag;
using nlohmann::json;
namespace ts = pgxrag::testing;

namespace {

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const {
    if (failures_ <= 3) return notes_;
    return notes_ + "; +" + std::to_string(failures_ - 3) + " more";
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// 1. Recall/precision against a counting oracle; harmonic-mean bound.
void metric_oracle(Check& c) {
  std::mt19937_64 rng(20250101);
  std::uniform_int_distribution<std::int64_t> count(0, 40);
  for (int i = 0; i < 10000; ++i) {
    auto tp = count(rng), fp = count(rng), fn = count(rng);
    std::string tag = "(" + std::to_string(tp) + "," + std::to_string(fp) + "," + std::to_string(fn) + ")";
    std::optional<double> r, p;
    try {
      r = compute_recall(tp, fn);
    } catch (const Error& e) {
      c.expect(e.code() == ErrorCode::UndefinedMetric && tp + fn == 0, "recall threw on " + tag);
    }
    try {
      p = compute_precision(tp, fp);
    } catch (const Error& e) {
      c.expect(e.code() == ErrorCode::UndefinedMetric && tp + fp == 0, "precision threw on " + tag);
    }
    if (tp + fn > 0) c.expect(r && *r == oracle::counted_ratio(tp, fn), "recall " + tag);
    if (tp + fp > 0) c.expect(p && *p == oracle::counted_ratio(tp, fp), "precision " + tag);
    if (r && p && *r + *p > 0) {
      double f = compute_f1(*p, *r);
      c.expect(std::min(*p, *r) <= f + 1e-12 && f <= std::max(*p, *r) + 1e-12, "F1 bound " + tag);
    }
  }
}

// 2. Group aggregates of the shipped annotation fixtures.
void paper_aggregates(Check& c) {
  auto load = [](const char* f) { return load_annotations(ts::data(std::string("fixtures/") + f)); };
  auto full = aggregate_group(load("phase1_260.jsonl"), "phase1");
  c.expect(full.n == 260, "phase1_260 n=" + std::to_string(full.n));
  std::vector<std::pair<std::string, std::string>> cells = {
      {format_mean(full.accuracy), "4.90"},   {format_mean(full.relevance), "5.00"},
      {format_mean(full.clarity), "5.00"},    {format_mean(full.completeness), "4.80"},
      {format_mean(full.recall.mean), "0.99"}};
  struct Row {
    const char* file;
    const char* group;
    const char* acc;
    const char* comp;
    const char* recall;
  };
  for (auto row : {Row{"subset20_phase1.jsonl", "phase1", "4.40", "4.80", "0.97"},
                   Row{"subset20_phase2.jsonl", "phase2", "4.60", "5.00", "0.99"},
                   Row{"subset20_gpt4omini.jsonl", "gpt4omini", "3.90", "4.20", "0.85"}}) {
    auto g = aggregate_group(load(row.file), row.group);
    cells.push_back({format_mean(g.accuracy), row.acc});
    cells.push_back({format_mean(g.completeness), row.comp});
    cells.push_back({format_mean(g.recall.mean), row.recall});
  }
  for (const auto& [got, want] : cells) c.expect(got == want, "got " + got + " want " + want);
}

// 3. Signed-rank test: brute-force equality, rank-sum identity, examples,
// shipped fixtures.
void wilcoxon_correctness(Check& c) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> score(1, 5), len(1, 16);
  int tested = 0;
  while (tested < 200) {
    std::vector<std::pair<double, double>> pairs(static_cast<std::size_t>(len(rng)));
    for (auto& [a, b] : pairs) {
      a = score(rng);
      b = score(rng);
    }
    auto want = oracle::brute_wilcoxon(pairs, true);
    if (want.n_eff == 0 || want.n_eff > 10) continue;
    ++tested;
    auto got = wilcoxon_signed_rank(pairs, Alternative::Greater);
    c.expect(got.p_value == want.p, "p " + fmt(got.p_value) + " vs brute " + fmt(want.p));
    c.expect(got.w_statistic == want.tail, "W " + fmt(got.w_statistic) + " vs brute " + fmt(want.tail));
    double n = static_cast<double>(got.n_effective);
    c.expect(std::fabs(got.w_plus + got.w_minus - n * (n + 1) / 2) <= 1e-9, "W+ + W- identity");
  }
  std::uniform_int_distribution<int> diff(-3, 3);
  for (int t = 0; t < 500; ++t) {
    std::vector<std::pair<double, double>> pairs(30);
    for (auto& [a, b] : pairs) b = diff(rng);
    try {
      auto r = wilcoxon_signed_rank(pairs, Alternative::Greater);
      double n = static_cast<double>(r.n_effective);
      c.expect(std::fabs(r.w_plus + r.w_minus - n * (n + 1) / 2) <= 1e-9, "W+ + W- identity, n=30");
    } catch (const Error& e) {
      c.expect(e.code() == ErrorCode::AllZeroDifferences, e.what());
    }
  }
  std::vector<std::pair<double, double>> three = {{0, 1}, {0, 2}, {0, 3}};
  auto r3 = wilcoxon_signed_rank(three, Alternative::Greater);
  c.expect(r3.w_statistic == 0 && r3.p_value == 0.125, "d=[1,2,3] p=" + fmt(r3.p_value));

  auto fixture = [](const char* name) {
    auto j = json::parse(ts::read_file(ts::data(std::string("fixtures/") + name)));
    std::vector<std::pair<double, double>> p;
    for (const auto& pr : j["pairs"]) p.emplace_back(pr[0].get<double>(), pr[1].get<double>());
    return p;
  };
  auto p1p2 = wilcoxon_signed_rank(fixture("wilcoxon_p1p2.json"), Alternative::Greater);
  c.expect(p1p2.w_statistic == 10.5, "phase1/phase2 W=" + fmt(p1p2.w_statistic));
  c.expect(p1p2.p_value > 0.05, "phase1/phase2 p=" + fmt(p1p2.p_value));
  auto gpt = wilcoxon_signed_rank(fixture("wilcoxon_p2gpt.json"), Alternative::Greater);
  c.expect(gpt.significant(0.05), "gpt/phase2 p=" + fmt(gpt.p_value));
}

// 4. Top-k search against a full argsort.
void retrieval_exactness(Check& c) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto unit = [&](std::size_t dim) {
    std::vector<double> v(dim);
    double s = 0;
    for (auto& x : v) {
      x = normal(rng);
      s += x * x;
    }
    for (auto& x : v) x /= std::sqrt(s);
    return v;
  };
  constexpr std::size_t kN = 200, kDim = 64, kK = 4;
  int tie_instances = 0;
  for (int inst = 0; inst < 1000; ++inst) {
    std::vector<IndexEntry> entries;
    for (std::size_t i = 0; i < kN; ++i) {
      auto v = unit(kDim);
      entries.push_back({"c" + std::to_string(rng() % 1000000) + "-" + std::to_string(i),
                         std::vector<float>(v.begin(), v.end())});
    }
    bool ties = inst % 3 == 0;
    if (ties) {
      ++tie_instances;
      for (int d = 0; d < 12; ++d) {
        auto src = entries[rng() % entries.size()].values;
        entries.push_back({"dup" + std::to_string(d), src});
      }
    }
    VectorIndex index(kDim, "acceptance", entries);
    // Tie instances sometimes query along a stored (duplicated) vector.
    std::vector<double> qv = unit(kDim);
    if (ties && inst % 2 == 0) {
      const auto& src = index.entries()[index.size() - 1].values;
      qv.assign(src.begin(), src.end());
      double s = 0;
      for (double x : qv) s += x * x;
      for (double& x : qv) x /= std::sqrt(s);
    }
    auto q = EmbeddingVector::from_unit(qv);

    std::vector<std::pair<double, std::string>> all;
    for (const auto& e : index.entries()) {
      double dot = 0;
      for (std::size_t i = 0; i < kDim; ++i) dot += q.values()[i] * static_cast<double>(e.values[i]);
      all.emplace_back(std::clamp(dot, -1.0, 1.0), e.chunk_id);
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    auto hits = search_top_k(index, q, kK);
    bool same = hits.size() == kK;
    for (std::size_t i = 0; same && i < kK; ++i) same = hits[i].chunk_id == all[i].second;
    c.expect(same, "instance " + std::to_string(inst));
  }
  c.expect(tie_instances > 0, "no tie instances generated");
}

// 5. `eval run` twice through the CLI: byte-identical, four summaries each.
void offline_determinism(Check& c) {
  ts::TempDir dir;
  auto q = [](const std::filesystem::path& p) { return ts::quote(p.string()); };
  auto run = [&](const std::string& cmd) { return ts::run_command(cmd, dir.path()); };

  auto dataset = ts::data("fixtures/dataset_260.jsonl");
  auto records = load_dataset(dataset);
  auto lexicon = GuidelineLexicon::load(ts::data("lexicon/cpic26.json"));
  c.expect(validate_dataset(records, lexicon).conformant, "dataset not conformant");

  auto ingest = run(ts::cli() + " ingest --corpus " + q(ts::data("corpus")) + " --sources CPIC --out " +
                    q(dir / "cpic.idx"));
  c.expect(ingest.exit_code == 0, "ingest failed: " + ingest.err);
  auto chunks = KnowledgeBase::load(chunk_store_path(dir / "cpic.idx")).size();
  c.expect(chunks >= 4, "index holds fewer than 4 chunks");

  for (auto out : {"run_a.jsonl", "run_b.jsonl"}) {
    auto r = run(ts::cli() + " eval run --dataset " + q(dataset) + " --phase 1 --index " + q(dir / "cpic.idx") +
                 " --out " + q(dir / out));
    c.expect(r.exit_code == 0, std::string("eval run ") + out + ": " + r.err);
  }
  auto a = ts::read_file(dir / "run_a.jsonl");
  auto b = ts::read_file(dir / "run_b.jsonl");
  c.expect(!a.empty() && a == b, "outputs differ between runs");

  std::istringstream lines(a);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    auto j = json::parse(line);
    ++n;
    c.expect(j["summaries"].size() == 4 && j["hits"].size() == 4,
             j["query_id"].get<std::string>() + " has " + std::to_string(j["summaries"].size()) + " summaries");
  }
  c.expect(n == 260, "responses: " + std::to_string(n));
}

// 6. Rendered prompts equal the golden files byte for byte.
void template_fidelity(Check& c) {
  auto set = TemplateSet::load(ts::data("templates"));
  auto in = json::parse(ts::read_file(ts::data("fixtures/golden/inputs.json")));
  auto golden = [](const char* f) { return ts::read_file(ts::data(std::string("fixtures/golden/") + f)); };
  const auto& l1 = in["layer1"];
  auto user1 = render_prompt(set.layer1_user, {{"source", l1["source"].get<std::string>()},
                                               {"query", l1["query"].get<std::string>()},
                                               {"content", l1["content"].get<std::string>()}});
  std::vector<SummaryItem> items;
  for (const auto& s : in["layer2"]["summaries"]) items.push_back({"", "", s.get<std::string>()});
  auto user2 = render_prompt(set.layer2_user, {{"user_input", in["layer2"]["user_input"].get<std::string>()},
                                               {"all_summaries", number_summaries(items)}});
  c.expect(render_prompt(set.layer1_system, {}) == golden("layer1_system.txt"), "layer1 system");
  c.expect(user1 == golden("layer1_user.txt"), "layer1 user");
  c.expect(render_prompt(set.layer2_system, {}) == golden("layer2_system.txt"), "layer2 system");
  c.expect(user2 == golden("layer2_user.txt"), "layer2 user");
}

// 7. Quiz ladder and multi-correct items.
void quiz_scoring(Check& c) {
  auto key = load_quiz(ts::data("fixtures/quiz/quiz20.json"));
  struct Sheet {
    const char* file;
    std::size_t correct;
    double accuracy;
  };
  for (auto s : {Sheet{"answers_sherpa_phase3.json", 18, 0.90}, Sheet{"answers_claude37.json", 17, 0.85},
                 Sheet{"answers_gemini20.json", 16, 0.80}, Sheet{"answers_gpt4omini.json", 14, 0.70}}) {
    auto r = score_quiz(load_answers(ts::data(std::string("fixtures/quiz/") + s.file)), key);
    c.expect(r.correct_count == s.correct && r.total == 20 && std::fabs(r.accuracy - s.accuracy) < 1e-12,
             std::string(s.file) + " scored " + std::to_string(r.correct_count));
  }
  int multi = 0;
  for (const auto& item : key) {
    if (item.correct.size() < 2) continue;
    ++multi;
    for (int choice : item.correct) {
      auto r = score_quiz({{item.item_id, choice}}, key);
      c.expect(r.correct_count == 1, item.item_id + " choice " + std::to_string(choice));
    }
  }
  c.expect(multi > 0, "no multi-correct item in the key");
}

// 8. Dataset conformance and violation naming.
void dataset_conformance(Check& c) {
  auto lexicon = GuidelineLexicon::load(ts::data("lexicon/cpic26.json"));
  auto records = load_dataset(ts::data("fixtures/dataset_260.jsonl"));
  auto ok = validate_dataset(records, lexicon);
  c.expect(ok.conformant && ok.total == 260, "shipped dataset rejected");
  c.expect(!validate_dataset({}, lexicon).conformant, "empty dataset accepted");

  for (const auto& entry : lexicon.entries()) {
    const auto& key = entry.guideline_key;
    auto fewer = records;
    fewer.erase(std::find_if(fewer.begin(), fewer.end(), [&](const auto& r) { return r.guideline_key == key; }));
    auto more = records;
    auto extra = *std::find_if(more.begin(), more.end(), [&](const auto& r) { return r.guideline_key == key; });
    extra.query_id += "-extra";
    more.push_back(extra);
    for (const auto* variant : {&fewer, &more}) {
      auto rep = validate_dataset(*variant, lexicon);
      c.expect(!rep.conformant && rep.violating_guidelines == std::vector<std::string>{key}, "not named: " + key);
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  void (*run)(Check&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "metric oracle equivalence", 5, metric_oracle},
      {2, "aggregate reproduction", 1, paper_aggregates},
      {3, "wilcoxon correctness", 10, wilcoxon_correctness},
      {4, "retrieval exactness", 10, retrieval_exactness},
      {5, "offline end-to-end determinism", 60, offline_determinism},
      {6, "template fidelity", 1, template_fidelity},
      {7, "quiz scoring", 1, quiz_scoring},
      {8, "dataset conformance", 1, dataset_conformance},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < cr.limit_seconds;
    bool pass = check.ok() && in_time;
    failed += !pass;
    char line[256];
    std::snprintf(line, sizeof line, "criterion %d %-32s %s  %.3fs (limit %.0fs)", cr.id, cr.name,
                  pass ? "PASS" : "FAIL", secs, cr.limit_seconds);
    std::cout << line;
    if (!check.ok()) std::cout << "  " << check.notes();
    if (!in_time) std::cout << "  over time limit";
    std::cout << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
