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

#include "pipeline/pipeline.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "augment/annotator.h"
#include "common/error.h"
#include "common/sha256.h"
#include "common/text_io.h"
#include "fewshot/sampler.h"
#include "freqcount/frequency_table.h"
#include "lexicon/lexicon.h"
#include "pipeline/mock_scorer.h"
#include "pipeline/protocol.h"
#include "promptfmt/prompt.h"
#include "selector/selector.h"

namespace rarelex::pipeline {

namespace fs = std::filesystem;

const StageRecord* RunManifest::Find(std::string_view stage) const {
  for (const StageRecord& s : stages) {
    if (s.stage == stage) return &s;
  }
  return nullptr;
}

std::map<std::string, std::string> RunManifest::Hashes() const {
  std::map<std::string, std::string> out;
  for (const StageRecord& s : stages) {
    for (const Artifact& a : s.artifacts) out[a.path] = a.sha256;
  }
  return out;
}

Json RunManifest::ToJson() const {
  Json doc;
  doc["stages"] = Json::array();
  for (const StageRecord& s : stages) {
    Json stage;
    stage["stage"] = s.stage;
    stage["artifacts"] = Json::array();
    for (const Artifact& a : s.artifacts) {
      stage["artifacts"].push_back({{"path", a.path}, {"sha256", a.sha256}});
    }
    doc["stages"].push_back(std::move(stage));
  }
  return doc;
}

namespace {

std::string Quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

class Run {
 public:
  explicit Run(const PipelineConfig& cfg) : cfg_(cfg), out_(cfg.out_dir) {}

  RunResult Execute() {
    fs::create_directories(out_);
    fs::remove(out_ / "manifest.json");
    for (const char* name : kStageNames) {
      fs::remove(out_ / name / kPartialMarker);
    }
    Stage("freq", [this] { Freq(); });
    Stage("lexicon", [this] { Lexicon(); });
    Stage("select", [this] { Select(); });
    Stage("augment", [this] { Augment(); });
    Stage("format", [this] { Format(); });
    Stage("sample", [this] { Sample(); });
    Stage("eval", [this] { Eval(); });
    WriteFile((out_ / "manifest.json").string(),
              result_.manifest.ToJson().dump(2) + "\n");
    return std::move(result_);
  }

 private:
  template <typename Fn>
  void Stage(const char* name, Fn&& body) {
    result_.manifest.stages.push_back({name, {}});
    current_ = &result_.manifest.stages.back();
    try {
      body();
    } catch (const std::exception& e) {
      const ErrorCode code = [&] {
        if (const auto* err = dynamic_cast<const Error*>(&e)) {
          return err->code();
        }
        if (dynamic_cast<const fs::filesystem_error*>(&e)) {
          return ErrorCode::kIo;
        }
        return ErrorCode::kInternal;
      }();
      const std::string message = std::string("stage ") + name + ": " + e.what();
      try {
        WriteFile((out_ / name / kPartialMarker).string(), message + "\n");
      } catch (const std::exception&) {
        // The original failure is the one worth reporting.
      }
      throw Error(code, message);
    }
  }

  std::string PathOf(const std::string& rel) const {
    return (out_ / rel).string();
  }

  void Emit(const std::string& rel, const std::string& content) {
    WriteFile(PathOf(rel), content);
    current_->artifacts.push_back({rel, Sha256Hex(content)});
  }

  void Freq() {
    for (const std::string& path : cfg_.corpus) {
      if (!fs::exists(path)) throw IoError("corpus file not found: " + path);
    }
    freqcount::BuildOptions opts;
    opts.threads = cfg_.threads;
    const freqcount::FrequencyTable built = freqcount::BuildTable(cfg_.corpus, opts);
    // Identify corpora by file name so the artifact does not depend on where
    // the inputs live.
    std::vector<std::string> ids;
    for (const std::string& path : cfg_.corpus) {
      ids.push_back(fs::path(path).filename().string());
    }
    freqcount::FrequencyTable table(built.counts(), std::move(ids));
    Emit("freq/table.tsv", freqcount::SerializeTable(table));
  }

  void Lexicon() {
    if (!fs::exists(cfg_.lexicon)) {
      throw IoError("lexicon file not found: " + cfg_.lexicon);
    }
    const auto raw = lexicon::ParseEntries(cfg_.lexicon);
    const auto medical = lexicon::PrepareMedical(
        raw, lexicon::MedicalTagPolicy{cfg_.tags_policy}, &prepare_);
    Emit("lexicon/medical.jsonl", lexicon::SerializeEntries(medical));
    std::ostringstream stats;
    stats << "field\tcount\n"
          << "entries_in\t" << prepare_.entries_in << "\n"
          << "non_medical\t" << prepare_.non_medical << "\n"
          << "empty_glosses_dropped\t" << prepare_.empty_glosses_dropped << "\n"
          << "duplicate_glosses_dropped\t" << prepare_.duplicate_glosses_dropped
          << "\n"
          << "entries_without_gloss\t" << prepare_.entries_without_gloss << "\n"
          << "entries_out\t" << prepare_.entries_out << "\n";
    Emit("lexicon/stats.tsv", stats.str());
  }

  void Select() {
    const auto table = freqcount::LoadTable(PathOf("freq/table.tsv"));
    const auto medical = lexicon::ParseEntries(PathOf("lexicon/medical.jsonl"));
    selector::SelectorConfig config{cfg_.threshold};
    selector::Selection selection =
        selector::BuildParaphraseMap(table, medical, config);
    selection.exclusions.non_medical = prepare_.non_medical;
    const auto problems = selector::AuditMap(selection.map, table);
    if (!problems.empty()) {
      throw Error(ErrorCode::kInternal,
                  "paraphrase map failed audit: " + problems.front());
    }
    Emit("select/map.jsonl", selector::SerializeMap(selection.map));
    Emit("select/exclusions.tsv", selector::SerializeExclusions(selection));
  }

  void Augment() {
    if (!fs::exists(cfg_.dataset)) {
      throw IoError("dataset file not found: " + cfg_.dataset);
    }
    raw_ = augment::LoadDataset(cfg_.dataset);
    selector::ParaphraseMap map;
    if (cfg_.augment) map = selector::LoadMap(PathOf("select/map.jsonl"));
    augment::AugmentResult result = augment::AugmentDataset(raw_, map);
    Emit("augment/dataset.jsonl", augment::SerializeDataset(result.dataset));
    Emit("augment/stats.tsv", augment::SerializeStats(result.stats));
  }

  void Format() {
    augmented_ = augment::LoadDataset(PathOf("augment/dataset.jsonl"));
    augmented_.name = raw_.name;
    if (augmented_.CountSplit(augment::Split::kTest) == 0) {
      throw FailedPrecondition("dataset has no test examples");
    }
    for (const auto& [arm, ds] : Arms()) {
      Emit("format/" + arm + ".jsonl",
           promptfmt::SerializePrompts(promptfmt::FormatDataset(*ds, cfg_.task)));
      Emit("format/" + arm + ".test.jsonl",
           promptfmt::SerializePrompts(promptfmt::FormatDataset(
               *ds, cfg_.task, augment::Split::kTest)));
    }
  }

  void Sample() {
    for (size_t k : cfg_.k_values) {
      fewshot::SamplePlan plan{cfg_.task, k, cfg_.seeds, cfg_.full};
      for (uint64_t seed : cfg_.seeds) {
        const std::string dir = SeedDir(k, seed);
        std::vector<std::string> reference_ids;
        for (const auto& [arm, ds] : Arms()) {
          const fewshot::FewShotSplit split =
              fewshot::SampleFewShot(*ds, plan, seed);
          std::vector<std::string> ids;
          for (const auto* part : {&split.train, &split.dev}) {
            for (const augment::Example& ex : *part) ids.push_back(ex.id);
          }
          if (reference_ids.empty()) {
            reference_ids = ids;
          } else if (ids != reference_ids) {
            throw Error(ErrorCode::kInternal,
                        "arms sampled different ids for seed " +
                            std::to_string(seed));
          }
          Emit(dir + "/train." + arm + ".jsonl",
               promptfmt::SerializePrompts(Format(split.train)));
          Emit(dir + "/dev." + arm + ".jsonl",
               promptfmt::SerializePrompts(Format(split.dev)));
        }
      }
    }
  }

  void Eval() {
    std::vector<augment::Example> gold;
    for (const augment::Example* ex : augmented_.Select(augment::Split::kTest)) {
      gold.push_back(*ex);
    }
    std::ostringstream summary;
    for (size_t k : cfg_.k_values) {
      std::map<std::string, std::vector<evalstats::SeedResult>> per_arm;
      for (uint64_t seed : cfg_.seeds) {
        for (const auto& [arm, ds] : Arms()) {
          const std::string prompts = PathOf("format/" + arm + ".test.jsonl");
          const std::string rel = "eval/k" + std::to_string(k) + "/seed" +
                                  std::to_string(seed) + "." + arm +
                                  ".preds.jsonl";
          const auto preds = Score(prompts, SeedDir(k, seed), arm, rel);
          per_arm[arm].push_back(
              {static_cast<int64_t>(seed),
               evalstats::TaskMetric(cfg_.task, preds, gold)});
        }
      }
      const evalstats::EvalReport report =
          evalstats::Aggregate(per_arm["paraphrase"], per_arm["baseline"]);
      Emit("eval/k" + std::to_string(k) + "/report.tsv",
           evalstats::SerializeReport(report));
      const char* metric =
          cfg_.task == promptfmt::Task::kMedNli ? "accuracy" : "pearson";
      summary << promptfmt::TaskName(cfg_.task) << " k=" << k << ": "
              << evalstats::Summarize(report, metric) << "\n";
      result_.reports[k] = report;
    }
    Emit("eval/summary.txt", summary.str());
  }

  std::vector<evalstats::PredictionRecord> Score(const std::string& prompts,
                                                 const std::string& seed_dir,
                                                 const std::string& arm,
                                                 const std::string& rel) {
    if (cfg_.scorer == "mock") {
      const auto preds =
          MockScoreAll(promptfmt::LoadPrompts(prompts), cfg_.mock);
      Emit(rel, evalstats::SerializePredictions(preds));
      return preds;
    }
    const std::string out = PathOf(rel);
    fs::create_directories(fs::path(out).parent_path());
    fs::remove(out);
    // The protocol passes only --in/--out; the sampled few-shot prompts
    // travel through the environment.
    ::setenv("RARELEX_TRAIN", PathOf(seed_dir + "/train." + arm + ".jsonl").c_str(), 1);
    ::setenv("RARELEX_DEV", PathOf(seed_dir + "/dev." + arm + ".jsonl").c_str(), 1);
    const std::string command = cfg_.scorer_command + " --in " + Quote(prompts) +
                                " --out " + Quote(out);
    const int status = std::system(command.c_str());
    if (status != 0) {
      throw FailedPrecondition("scorer exited with status " +
                               std::to_string(status) + ": " + command);
    }
    const ValidationReport report = ValidateProtocol(out, prompts);
    if (!report.ok()) {
      throw FailedPrecondition("scorer output " + out +
                               " violates the protocol:\n" + report.ToString());
    }
    current_->artifacts.push_back({rel, Sha256FileHex(out)});
    return evalstats::LoadPredictions(out);
  }

  std::vector<promptfmt::PromptRecord> Format(
      const std::vector<augment::Example>& examples) const {
    std::vector<promptfmt::PromptRecord> out;
    out.reserve(examples.size());
    for (const augment::Example& ex : examples) {
      out.push_back(promptfmt::FormatExample(ex, cfg_.task));
    }
    return out;
  }

  std::vector<std::pair<std::string, const augment::Dataset*>> Arms() const {
    return {{"paraphrase", &augmented_}, {"baseline", &raw_}};
  }

  static std::string SeedDir(size_t k, uint64_t seed) {
    return "sample/k" + std::to_string(k) + "/seed" + std::to_string(seed);
  }

  const PipelineConfig& cfg_;
  fs::path out_;
  RunResult result_;
  StageRecord* current_ = nullptr;
  lexicon::PrepareStats prepare_;
  augment::Dataset raw_;
  augment::Dataset augmented_;
};

}  // namespace

RunResult RunPipeline(const PipelineConfig& cfg) {
  cfg.Validate();
  return Run(cfg).Execute();
}

}  // namespace rarelex::pipeline
