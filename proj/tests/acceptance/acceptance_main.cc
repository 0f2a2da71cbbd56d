// Copyright 2026 The Rarelex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate. Runs each release criterion end to end and prints one
// PASS/FAIL line per criterion; exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "augment/annotator.h"
#include "augment/dataset.h"
#include "common/error.h"
#include "common/jsonl.h"
#include "evalstats/evaluation.h"
#include "evalstats/stats.h"
#include "fewshot/sampler.h"
#include "fewshot/splitmix64.h"
#include "freqcount/frequency_table.h"
#include "lexicon/lexicon.h"
#include "pipeline/config.h"
#include "pipeline/pipeline.h"
#include "promptfmt/prompt.h"
#include "selector/selector.h"
#include "selector/sweep.h"
#include "support/corpus_generator.h"
#include "support/test_util.h"

namespace rarelex {
namespace {

struct TTestCase {
  std::vector<double> a, b;
  double t, p;
};
struct PearsonCase {
  std::vector<double> x, y;
  double r;
};
struct AggregateCase {
  std::vector<double> ours, base;
  double mean, std, baseline_mean, baseline_std, p;
};
struct TCdfCase {
  double t, dof, cdf;
};

#include "reference_stats.inc"

namespace fs = std::filesystem;
using augment::Dataset;
using augment::Example;
using freqcount::FrequencyTable;
using lexicon::DictionaryEntry;
using testing::SourcePath;

// Collects failures for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 20) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  const std::vector<std::string>& failures() const { return failures_; }
  size_t failed() const { return failed_; }

 private:
  std::vector<std::string> failures_;
  size_t failed_ = 0;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       since)
      .count();
}

std::string Lower(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

std::vector<std::string> ReadLines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

bool SameCounts(const FrequencyTable& table,
                const std::map<std::string, uint64_t>& expected) {
  if (table.size() != expected.size()) return false;
  for (const auto& [word, n] : expected) {
    if (table.Count(word) != n) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

void FrequencyOracle(Check* check) {
  const auto start = std::chrono::steady_clock::now();
  testing::TempDir dir;
  const testing::CorpusPlan plan =
      testing::LoadCorpusPlan(SourcePath("data/fixtures/corpus_plan.tsv"));
  const std::string plain = dir.File("corpus.txt");
  testing::WriteCorpus(plan, {plain}, 424242);

  std::map<std::string, uint64_t> planned;
  uint64_t planned_total = 0;
  for (const auto& [word, n] : plan) {
    planned[word] += n;
    planned_total += n;
  }
  check->Expect(planned_total == 1000000, "plan is not 1M tokens");

  const std::vector<std::string> lines = ReadLines(plain);
  const auto naive = testing::NaiveCount(lines);
  check->Expect(naive == planned, "naive counter disagrees with the plan");

  const std::vector<std::string> one = {plain};
  freqcount::BuildOptions options;
  options.threads = 4;
  const FrequencyTable table = freqcount::BuildTable(one, options);
  check->Expect(table.total_tokens() == planned_total, "total token count");
  check->Expect(SameCounts(table, naive), "build_table != naive counter");

  // Random 8-way partition of the lines, counted per part and merged.
  fewshot::SplitMix64 rng(8);
  std::vector<std::string> parts(8);
  for (const std::string& line : lines) {
    std::string& part = parts[rng.UniformBelow(8)];
    part += line;
    part += '\n';
  }
  FrequencyTable merged;
  for (size_t i = 0; i < parts.size(); ++i) {
    const std::vector<std::string> paths = {
        dir.Write("part-" + std::to_string(i) + ".txt", parts[i])};
    freqcount::BuildOptions single;
    single.threads = 1;
    merged = freqcount::Merge(merged, freqcount::BuildTable(paths, single));
  }
  check->Expect(SameCounts(merged, naive), "partition + merge != naive");
  check->Expect(merged.total_tokens() == planned_total, "merged total");

  const double elapsed = Seconds(start);
  check->Expect(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
}

// ---------------------------------------------------------------------------

struct FixtureTables {
  FrequencyTable table;
  std::vector<DictionaryEntry> raw;
  std::vector<DictionaryEntry> medical;
};

FixtureTables LoadFixtureTables(const testing::TempDir& dir) {
  const std::string corpus = dir.File("fixture.txt");
  testing::WriteCorpus(
      testing::LoadCorpusPlan(SourcePath("data/fixtures/corpus_plan.tsv")),
      {corpus}, 20260101);
  FixtureTables out;
  const std::vector<std::string> paths = {corpus};
  out.table = freqcount::BuildTable(paths);
  out.raw = lexicon::ParseEntries(SourcePath("data/fixtures/lexicon.jsonl"));
  out.medical =
      lexicon::PrepareMedical(out.raw, lexicon::MedicalTagPolicy::Default());
  return out;
}

DictionaryEntry Entry(std::string word, std::vector<std::string> glosses,
                      std::string tag = "medical") {
  DictionaryEntry e;
  e.headword = std::move(word);
  e.glosses = std::move(glosses);
  e.tags = {std::move(tag)};
  e.is_abbreviation = lexicon::LooksLikeAbbreviation(e.headword);
  return e;
}

void ThresholdBoundary(Check* check) {
  freqcount::CountMap counts = {
      {"below", 199999}, {"at", 200000}, {"common", 5000000}};
  const FrequencyTable table(counts, {"boundary"});
  selector::SelectorConfig config;
  config.threshold = 200000;
  check->Expect(selector::IsRare(table, "below", config), "199,999 not rare");
  check->Expect(!selector::IsRare(table, "at", config), "200,000 rare");

  const std::vector<DictionaryEntry> medical = {
      Entry("below", {"common"}), Entry("at", {"common"})};
  const selector::Selection sel =
      selector::BuildParaphraseMap(table, medical, config);
  check->Expect(sel.map.entries.count("below") == 1, "199,999 not selected");
  check->Expect(sel.map.entries.count("at") == 0, "200,000 selected");
  check->Expect(sel.exclusions.not_rare == 1, "not_rare counter");

  testing::TempDir dir;
  const FixtureTables fx = LoadFixtureTables(dir);
  const std::vector<uint64_t> grid =
      selector::ParseThresholds("20000:200000:20000");
  std::vector<Dataset> datasets = {
      augment::LoadDataset(SourcePath("data/fixtures/mednli.jsonl")),
      augment::LoadDataset(SourcePath("data/fixtures/medsts.jsonl"))};
  const selector::SweepReport report =
      selector::SweepThresholds(fx.table, fx.medical, grid, datasets);
  check->Expect(report.rows.size() == 10, "sweep emitted " +
                                              std::to_string(report.rows.size()) +
                                              " rows");
  for (size_t i = 0; i < report.rows.size(); ++i) {
    check->Expect(report.rows[i].threshold == 20000 * (i + 1),
                  "sweep threshold order");
    if (i > 0) {
      check->Expect(report.rows[i].rare_words >= report.rows[i - 1].rare_words,
                    "rare word count shrinks as the threshold grows");
    }
  }
  const std::string tsv = selector::SerializeSweep(report);
  check->Expect(std::count(tsv.begin(), tsv.end(), '\n') == 11,
                "sweep TSV is not header + 10 rows");
}

// ---------------------------------------------------------------------------

// Independent restatement of the three rules on one map entry.
bool PassesRules(const std::string& word, const selector::Paraphrase& p,
                 const std::vector<DictionaryEntry>& medical,
                 const FrequencyTable& table, uint64_t threshold) {
  const DictionaryEntry* entry = nullptr;
  for (const DictionaryEntry& e : medical) {
    if (e.headword == word) entry = &e;
  }
  if (entry == nullptr) return false;
  const uint64_t count = table.Count(Lower(word));
  if (!(count < threshold || p.is_abbreviation)) return false;
  if (entry->glosses.size() != 1 || entry->glosses[0] != p.text) return false;
  for (const std::string& token : testing::NaiveTokens(p.text)) {
    if (token != Lower(word) && table.Count(token) < threshold) return false;
  }
  return true;
}

void SelectionAudit(Check* check) {
  testing::TempDir dir;
  const FixtureTables fx = LoadFixtureTables(dir);
  selector::SelectorConfig config;
  config.threshold = 50;
  const lexicon::MedicalTagPolicy policy = lexicon::MedicalTagPolicy::Default();
  const selector::Selection base =
      selector::SelectFromLexicon(fx.table, fx.raw, policy, config);
  check->Expect(!base.map.empty(), "fixture map is empty");
  check->Expect(selector::AuditMap(base.map, fx.table).empty(),
                "audit flags the selected map");
  for (const auto& [word, p] : base.map.entries) {
    check->Expect(PassesRules(word, p, fx.medical, fx.table, 50),
                  "entry '" + word + "' breaks a rule");
  }

  struct Mutation {
    DictionaryEntry entry;
    uint64_t selector::ExclusionCounts::*counter;
  };
  const std::vector<Mutation> mutations = {
      {Entry("zzmultigloss", {"heart pain", "blood loss"}),
       &selector::ExclusionCounts::multi_gloss},
      {Entry("zzraregloss", {"a qqunseenword of the heart"}),
       &selector::ExclusionCounts::rare_gloss_token},
      {Entry("zznonmedical", {"heart"}, "sports"),
       &selector::ExclusionCounts::non_medical},
  };
  for (const Mutation& m : mutations) {
    std::vector<DictionaryEntry> raw = fx.raw;
    raw.push_back(m.entry);
    const selector::Selection sel =
        selector::SelectFromLexicon(fx.table, raw, policy, config);
    check->Expect(sel.map.entries.count(m.entry.headword) == 0,
                  m.entry.headword + " was selected");
    check->Expect(sel.exclusions.*m.counter == base.exclusions.*m.counter + 1,
                  m.entry.headword + ": wrong exclusion counter");
    check->Expect(sel.exclusions.total() == base.exclusions.total() + 1,
                  m.entry.headword + ": other counters moved");
    check->Expect(sel.map.entries == base.map.entries,
                  m.entry.headword + ": map changed");
  }

  // Entries smuggled into a map directly are caught by the audit.
  selector::ParaphraseMap tampered = base.map;
  tampered.entries["the"] = {"heart", false};
  tampered.entries["zzraregloss"] = {"a qqunseenword", false};
  const std::vector<std::string> problems =
      selector::AuditMap(tampered, fx.table);
  check->Expect(problems.size() == 2, "audit misses injected entries");
  for (const std::string& p : problems) {
    check->Expect(p.starts_with("the:") || p.starts_with("zzraregloss:"),
                  "unexpected audit finding: " + p);
  }
}

// ---------------------------------------------------------------------------

size_t BruteForceCount(const std::string& text,
                       const selector::ParaphraseMap& map) {
  size_t hits = 0;
  for (const auto& [b, e] : testing::NaiveSpans(text)) {
    const std::string surface = text.substr(b, e - b);
    bool match = false;
    for (const auto& [word, p] : map.entries) {
      if (p.is_abbreviation ? surface == word : Lower(surface) == Lower(word)) {
        match = true;
      }
    }
    if (!match) continue;
    size_t next = e;
    while (next < text.size() && text[next] == ' ') ++next;
    if (next < text.size() && text[next] == '(') continue;
    ++hits;
  }
  return hits;
}

std::string RandomCase(const std::string& word, fewshot::SplitMix64* rng) {
  std::string out = word;
  switch (rng->UniformBelow(4)) {
    case 0:
      for (char& c : out) c = static_cast<char>(std::toupper(c));
      break;
    case 1:
      out[0] = static_cast<char>(std::toupper(out[0]));
      break;
    case 2:
      out = Lower(out);
      break;
    default:
      break;
  }
  return out;
}

void AugmentationRoundTrip(Check* check) {
  testing::TempDir dir;
  const FixtureTables fx = LoadFixtureTables(dir);
  selector::SelectorConfig config;
  config.threshold = 50;
  const selector::ParaphraseMap map =
      selector::BuildParaphraseMap(fx.table, fx.medical, config).map;
  const augment::Annotator annotator(map);

  std::vector<std::string> pool;
  for (const char* name : {"mednli", "medsts"}) {
    const Dataset ds = augment::LoadDataset(
        SourcePath(std::string("data/fixtures/") + name + ".jsonl"));
    for (const Example& e : ds.examples) {
      pool.push_back(e.sentence1);
      pool.push_back(e.sentence2);
    }
  }
  std::vector<std::string> headwords;
  for (const auto& [word, p] : map.entries) headwords.push_back(word);

  fewshot::SplitMix64 rng(1000);
  size_t total_hits = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string text = pool[rng.UniformBelow(pool.size())];
    // Splice in extra headwords, some cased oddly, some already followed by
    // a parenthesis.
    const size_t extra = rng.UniformBelow(4);
    for (size_t j = 0; j < extra; ++j) {
      const std::string& w = headwords[rng.UniformBelow(headwords.size())];
      std::string piece = map.entries.at(w).is_abbreviation && rng.UniformBelow(2)
                              ? w
                              : RandomCase(w, &rng);
      if (rng.UniformBelow(5) == 0) piece += " (see above)";
      const size_t at = rng.UniformBelow(3);
      if (at == 0) {
        text = piece + " " + text;
      } else if (at == 1) {
        text += " " + piece;
      } else {
        const size_t space = text.find(' ', text.size() / 2);
        if (space != std::string::npos) text.insert(space, " " + piece);
      }
    }
    const augment::Annotator::Result r = annotator.Augment(text);
    total_hits += r.spans.size();
    check->Expect(augment::StripAnnotations(r.text, r.spans) == text,
                  "strip mismatch: " + text);
    check->Expect(annotator.Augment(r.text).text == r.text,
                  "not idempotent: " + text);
    check->Expect(r.spans.size() == BruteForceCount(text, map),
                  "count mismatch: " + text);
  }
  check->Expect(total_hits > 500, "sentences barely exercise the map");
}

// ---------------------------------------------------------------------------

void PromptExactness(Check* check) {
  using promptfmt::Task;
  const Dataset ds =
      augment::LoadDataset(SourcePath("data/fixtures/mednli.jsonl"));
  for (const Example& e : ds.examples) {
    const promptfmt::PromptRecord r = promptfmt::FormatExample(e, Task::kMedNli);
    std::string s1 = e.sentence1;
    if (!s1.empty() && (s1.back() == '.' || s1.back() == '!' ||
                        s1.back() == '?')) {
      s1.pop_back();
    }
    const bool kept = e.sentence1.back() == '!' || e.sentence1.back() == '?';
    const std::string expected =
        kept ? e.sentence1 + " [MASK]. " + e.sentence2
             : s1 + ". [MASK]. " + e.sentence2;
    check->Expect(r.instance.rendered == expected, "prompt for " + e.id);
    check->Expect(r.instance.rendered.substr(r.instance.mask_offset, 6) ==
                      "[MASK]",
                  "mask offset for " + e.id);
  }
  const Example hand = [] {
    Example e;
    e.id = "hand";
    e.sentence1 = "He is afebrile (having no fever)";
    e.sentence2 = "He has no fever";
    e.label = augment::Label(std::string("entailment"));
    return e;
  }();
  check->Expect(promptfmt::FormatExample(hand, Task::kMedNli).instance.rendered ==
                    "He is afebrile (having no fever). [MASK]. He has no fever",
                "hand example");

  const auto tpl = promptfmt::PromptTemplate::ForTask(Task::kMedNli);
  const std::map<std::string, std::string> bijection = {
      {"entailment", "Yes"}, {"neutral", "maybe"}, {"contradiction", "No"}};
  std::set<std::string> tokens;
  for (const auto& [label, token] : bijection) {
    check->Expect(tpl.Verbalize(label) == token, "verbalize " + label);
    check->Expect(tpl.Unverbalize(token) == label, "unverbalize " + token);
    tokens.insert(token);
  }
  check->Expect(tokens.size() == 3 && tpl.verbalizers().size() == 3,
                "verbalizer is not a bijection");

  double worst = 0.0;
  fewshot::SplitMix64 rng(5);
  std::vector<double> scores = {0.0, 1.3, 2.5, 4.9, 5.0};
  for (int i = 0; i < 100000; ++i) scores.push_back(5.0 * rng.NextDouble());
  for (double s : scores) {
    const promptfmt::ProbabilityPair p = promptfmt::ScoreToTarget(s);
    worst = std::max(worst,
                     std::fabs(promptfmt::PredictionToScore(p.yes, p.no) - s));
  }
  check->Expect(worst < 1e-12, "STS round trip error " + std::to_string(worst));
}

// ---------------------------------------------------------------------------

std::vector<std::string> Ids(const std::vector<Example>& v) {
  std::vector<std::string> out;
  for (const Example& e : v) out.push_back(e.id);
  return out;
}

Dataset Synthetic(size_t train, size_t dev, uint64_t salt) {
  Dataset ds;
  fewshot::SplitMix64 rng(salt);
  const size_t sizes[] = {train, dev, 20};
  for (size_t s = 0; s < 3; ++s) {
    for (size_t i = 0; i < sizes[s]; ++i) {
      Example e;
      e.id = std::to_string(rng.Next() % 100000) + "-" + std::to_string(s) +
             "-" + std::to_string(i);
      e.sentence1 = "a";
      e.sentence2 = "b";
      e.label = augment::Label(std::string("neutral"));
      e.split = augment::kAllSplits[s];
      ds.examples.push_back(e);
    }
  }
  return ds;
}

void FewShotDeterminism(Check* check) {
  const Dataset ds = Synthetic(11232, 1395, 1);
  Dataset reversed = ds;
  std::reverse(reversed.examples.begin(), reversed.examples.end());
  for (size_t k : {16, 32, 64, 128, 256}) {
    fewshot::SamplePlan plan;
    plan.k = k;
    plan.Validate();
    for (uint64_t seed : plan.seeds) {
      const fewshot::FewShotSplit a = fewshot::SampleFewShot(ds, plan, seed);
      const fewshot::FewShotSplit b = fewshot::SampleFewShot(ds, plan, seed);
      const fewshot::FewShotSplit c =
          fewshot::SampleFewShot(reversed, plan, seed);
      const std::string tag =
          "k=" + std::to_string(k) + " seed=" + std::to_string(seed);
      check->Expect(Ids(a.train) == Ids(b.train) && Ids(a.dev) == Ids(b.dev),
                    "repeat differs " + tag);
      check->Expect(Ids(a.train) == Ids(c.train) && Ids(a.dev) == Ids(c.dev),
                    "row order matters " + tag);
      check->Expect(a.train.size() == k && a.dev.size() == k, "size " + tag);
    }
  }

  for (uint64_t f = 0; f < 100; ++f) {
    fewshot::SplitMix64 rng(f + 77);
    fewshot::SamplePlan plan;
    plan.task = promptfmt::Task::kMedSts;
    plan.k = 16 + rng.UniformBelow(241);
    const size_t n = 2 * plan.k + rng.UniformBelow(500);
    const Dataset sts = Synthetic(n, 0, f);
    const fewshot::FewShotSplit s =
        fewshot::SampleFewShot(sts, plan, rng.Next());
    std::set<std::string> all;
    for (const auto& id : Ids(s.train)) all.insert(id);
    for (const auto& id : Ids(s.dev)) all.insert(id);
    check->Expect(all.size() == 2 * plan.k,
                  "MedSTS overlap in fixture " + std::to_string(f));
  }
}

// ---------------------------------------------------------------------------

void Statistics(Check* check) {
  for (const PearsonCase& c : kPearsonCases) {
    const double r = evalstats::Pearson(c.x, c.y);
    check->Expect(std::fabs(r - c.r) <= 1e-9, "pearson");
  }
  for (const TTestCase& c : kTTestCases) {
    const evalstats::TTestResult r = evalstats::PairedTTest(c.a, c.b);
    check->Expect(std::fabs(r.t - c.t) <= 1e-9 * std::max(1.0, std::fabs(c.t)),
                  "t statistic");
    check->Expect(std::fabs(r.p_two_tailed - c.p) <= 1e-9, "t-test p");
  }
  for (const AggregateCase& c : kAggregateCases) {
    std::vector<evalstats::SeedResult> ours, base;
    for (size_t i = 0; i < c.ours.size(); ++i) {
      ours.push_back({static_cast<int64_t>(i), c.ours[i]});
      base.push_back({static_cast<int64_t>(i), c.base[i]});
    }
    const evalstats::EvalReport r = evalstats::Aggregate(ours, base);
    check->Expect(std::fabs(r.mean - c.mean) <= 1e-9 &&
                      std::fabs(r.std - c.std) <= 1e-9 &&
                      std::fabs(r.baseline_mean - c.baseline_mean) <= 1e-9 &&
                      std::fabs(r.baseline_std - c.baseline_std) <= 1e-9 &&
                      std::fabs(r.p_value - c.p) <= 1e-9,
                  "aggregate");
  }
  for (const TCdfCase& c : kTCdfCases) {
    check->Expect(std::fabs(evalstats::StudentTCdf(c.t, c.dof) - c.cdf) <= 1e-9,
                  "t cdf");
  }

  const std::vector<double> a = {0.61, 0.64, 0.58, 0.66, 0.6,
                                 0.63, 0.59, 0.62, 0.65, 0.61};
  std::vector<double> shifted;
  for (double v : a) shifted.push_back(v + 0.06);
  check->Expect(evalstats::PairedTTest(a, a).p_two_tailed == 1.0, "a == b");
  check->Expect(evalstats::PairedTTest(shifted, a).p_two_tailed == 0.0,
                "constant nonzero difference");
  for (double dof : {1.0, 2.0, 9.0, 100.0}) {
    check->Expect(evalstats::StudentTCdf(0.0, dof) == 0.5, "cdf(0)");
  }
}

// ---------------------------------------------------------------------------

void EndToEnd(Check* check) {
  const auto start = std::chrono::steady_clock::now();
  testing::TempDir dir;
  const std::string config_path = SourcePath("data/fixtures/run.json");
  const Json doc = Json::parse(testing::Slurp(config_path));
  std::vector<std::string> corpus;
  for (const auto& p : doc.at("corpus")) {
    corpus.push_back(dir.File(fs::path(p.get<std::string>()).filename().string()));
  }
  testing::WriteCorpus(
      testing::LoadCorpusPlan(SourcePath("data/fixtures/corpus_plan.tsv")),
      corpus, 20260101);

  const auto run = [&](const std::string& out, bool augment) {
    Json overrides = {{"corpus", corpus},
                      {"out_dir", dir.File(out)},
                      {"augment", augment}};
    return pipeline::RunPipeline(pipeline::LoadConfig(config_path, overrides));
  };
  const pipeline::RunResult first = run("first", true);
  const pipeline::RunResult second = run("second", true);
  const auto hashes = first.manifest.Hashes();
  check->Expect(hashes == second.manifest.Hashes(), "artifact hashes differ");
  check->Expect(first.manifest.stages.size() == 7, "stage count");
  check->Expect(hashes.size() > 100, "suspiciously few artifacts");

  // With an empty map every paraphrase-arm artifact is byte-identical to
  // its baseline twin, and to the baseline arm of the augmented run.
  run("empty", false);
  size_t compared = 0;
  const fs::path empty = dir.path() / "empty";
  for (const auto& [path, hash] : hashes) {
    const size_t at = path.find("paraphrase");
    if (at == std::string::npos) continue;
    std::string twin = path;
    twin.replace(at, std::string("paraphrase").size(), "baseline");
    const std::string ours = testing::Slurp((empty / path).string());
    check->Expect(ours == testing::Slurp((empty / twin).string()),
                  "empty-map arm differs: " + path);
    check->Expect(ours == testing::Slurp((dir.path() / "first" / twin).string()),
                  "empty-map arm differs from baseline run: " + path);
    ++compared;
  }
  check->Expect(compared > 40, "too few arm artifacts compared");

  for (const auto& [k, report] : first.reports) {
    const std::string tag = "k=" + std::to_string(k);
    check->Expect(report.mean == 1.0, "oracle accuracy " + tag);
    check->Expect(report.baseline_mean == 1.0, "baseline accuracy " + tag);
    check->Expect(report.p_value == 1.0, "p-value " + tag);
    check->Expect(report.n == 10, "seed count " + tag);
  }
  check->Expect(!first.reports.empty(), "no reports");

  const double elapsed = Seconds(start);
  check->Expect(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* name;
  void (*run)(Check*);
};

int Main() {
  const Criterion criteria[] = {
      {"frequency-oracle", FrequencyOracle},
      {"threshold-boundary", ThresholdBoundary},
      {"selection-audit", SelectionAudit},
      {"augmentation-round-trip", AugmentationRoundTrip},
      {"prompt-exactness", PromptExactness},
      {"few-shot-determinism", FewShotDeterminism},
      {"statistics", Statistics},
      {"end-to-end", EndToEnd},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(&check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %s (%.2f s)\n", check.ok() ? "PASS" : "FAIL", c.name,
                Seconds(start));
    for (const std::string& f : check.failures()) {
      std::printf("    %s\n", f.c_str());
    }
    if (check.failed() > check.failures().size()) {
      std::printf("    ... %zu more\n",
                  check.failed() - check.failures().size());
    }
    if (!check.ok()) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace rarelex

int main() { return rarelex::Main(); }
