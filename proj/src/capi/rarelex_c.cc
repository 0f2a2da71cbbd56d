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

#include "rarelex/rarelex.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <limits>
#include <new>
#include <regex>
#include <string>
#include <vector>

#include "augment/annotator.h"
#include "common/error.h"
#include "common/text_io.h"
#include "evalstats/evaluation.h"
#include "evalstats/stats.h"
#include "fewshot/sampler.h"
#include "freqcount/frequency_table.h"
#include "freqcount/tokenizer.h"
#include "lexicon/lexicon.h"
#include "pipeline/config.h"
#include "pipeline/mock_scorer.h"
#include "pipeline/pipeline.h"
#include "pipeline/protocol.h"
#include "promptfmt/prompt.h"
#include "selector/selector.h"
#include "selector/sweep.h"

struct rlx_freq_table {
  rarelex::freqcount::FrequencyTable table;
};

struct rlx_lexicon {
  std::vector<rarelex::lexicon::DictionaryEntry> entries;
};

struct rlx_paraphrase_map {
  rarelex::selector::ParaphraseMap map;
};

namespace {

using namespace rarelex;  // NOLINT

thread_local std::string last_error;

rlx_status ToStatus(ErrorCode code) {
  return static_cast<rlx_status>(static_cast<int>(code));
}

template <typename Fn>
rlx_status Guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return RLX_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RLX_INTERNAL;
  } catch (const std::filesystem::filesystem_error& e) {
    last_error = e.what();
    return RLX_IO;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RLX_INTERNAL;
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string(what) + " is NULL");
}

char* CopyOut(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

std::vector<std::string> Strings(const char* const* items, size_t n,
                                 const char* what) {
  if (n > 0) Require(items, what);
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    Require(items[i], what);
    out.emplace_back(items[i]);
  }
  return out;
}

void Fill(const selector::ExclusionCounts& x, rlx_exclusions* out) {
  if (out == nullptr) return;
  out->non_medical = x.non_medical;
  out->not_single_word = x.not_single_word;
  out->not_rare = x.not_rare;
  out->multi_gloss = x.multi_gloss;
  out->rare_gloss_token = x.rare_gloss_token;
}

// "seed7.jsonl" -> 7; falls back to the position in the argument list.
int64_t SeedOf(const std::string& path, size_t index) {
  static const std::regex kSeed(R"(seed(\d+))");
  std::smatch m;
  const std::string name = std::filesystem::path(path).filename().string();
  if (std::regex_search(name, m, kSeed) && m[1].length() < 18) {
    return std::stoll(m[1].str());
  }
  return static_cast<int64_t>(index);
}

}  // namespace

extern "C" {

const char* rlx_last_error(void) { return last_error.c_str(); }

const char* rlx_version(void) { return RARELEX_VERSION; }

void rlx_string_free(char* s) { std::free(s); }

rlx_status rlx_freq_build(const char* const* paths, size_t n_paths,
                          unsigned threads, rlx_freq_table** out) {
  return Guard([&] {
    Require(out, "out");
    const auto files = Strings(paths, n_paths, "paths");
    freqcount::BuildOptions opts;
    opts.threads = threads;
    *out = new rlx_freq_table{freqcount::BuildTable(files, opts)};
  });
}

rlx_status rlx_freq_load(const char* path, rlx_freq_table** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new rlx_freq_table{freqcount::LoadTable(path)};
  });
}

rlx_status rlx_freq_save(const rlx_freq_table* table, const char* path) {
  return Guard([&] {
    Require(table, "table");
    Require(path, "path");
    freqcount::SaveTable(table->table, path);
  });
}

rlx_status rlx_freq_merge(const rlx_freq_table* a, const rlx_freq_table* b,
                          rlx_freq_table** out) {
  return Guard([&] {
    Require(a, "a");
    Require(b, "b");
    Require(out, "out");
    *out = new rlx_freq_table{freqcount::Merge(a->table, b->table)};
  });
}

uint64_t rlx_freq_count(const rlx_freq_table* table, const char* word) {
  if (table == nullptr || word == nullptr) return 0;
  try {
    const std::string token = freqcount::AsSingleToken(word);
    return token.empty() ? 0 : table->table.Count(token);
  } catch (...) {
    return 0;
  }
}

uint64_t rlx_freq_total(const rlx_freq_table* table) {
  return table == nullptr ? 0 : table->table.total_tokens();
}

size_t rlx_freq_size(const rlx_freq_table* table) {
  return table == nullptr ? 0 : table->table.size();
}

rlx_status rlx_freq_relative(const rlx_freq_table* table, const char* word,
                             double* out) {
  return Guard([&] {
    Require(table, "table");
    Require(word, "word");
    Require(out, "out");
    *out = freqcount::RelativeFrequency(table->table, word);
  });
}

void rlx_freq_free(rlx_freq_table* table) { delete table; }

rlx_status rlx_lexicon_load(const char* path, rlx_lexicon** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new rlx_lexicon{lexicon::ParseEntries(path)};
  });
}

rlx_status rlx_lexicon_prepare(const rlx_lexicon* raw, const char* tags_policy,
                               rlx_lexicon** out, rlx_prepare_stats* stats) {
  return Guard([&] {
    Require(raw, "raw");
    Require(out, "out");
    const auto policy = lexicon::MedicalTagPolicy::Parse(
        tags_policy == nullptr ? "default" : tags_policy);
    lexicon::PrepareStats s;
    auto medical = lexicon::PrepareMedical(raw->entries, policy, &s);
    *out = new rlx_lexicon{std::move(medical)};
    if (stats != nullptr) {
      stats->entries_in = s.entries_in;
      stats->non_medical = s.non_medical;
      stats->empty_glosses_dropped = s.empty_glosses_dropped;
      stats->duplicate_glosses_dropped = s.duplicate_glosses_dropped;
      stats->entries_without_gloss = s.entries_without_gloss;
      stats->entries_out = s.entries_out;
    }
  });
}

rlx_status rlx_lexicon_save(const rlx_lexicon* lexicon, const char* path) {
  return Guard([&] {
    Require(lexicon, "lexicon");
    Require(path, "path");
    lexicon::SaveEntries(lexicon->entries, path);
  });
}

size_t rlx_lexicon_size(const rlx_lexicon* lexicon) {
  return lexicon == nullptr ? 0 : lexicon->entries.size();
}

void rlx_lexicon_free(rlx_lexicon* lexicon) { delete lexicon; }

rlx_status rlx_select(const rlx_freq_table* table, const rlx_lexicon* medical,
                      uint64_t threshold, rlx_paraphrase_map** out,
                      rlx_exclusions* exclusions) {
  return Guard([&] {
    Require(table, "table");
    Require(medical, "medical");
    Require(out, "out");
    selector::Selection selection = selector::BuildParaphraseMap(
        table->table, medical->entries, selector::SelectorConfig{threshold});
    Fill(selection.exclusions, exclusions);
    *out = new rlx_paraphrase_map{std::move(selection.map)};
  });
}

rlx_status rlx_map_load(const char* path, rlx_paraphrase_map** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new rlx_paraphrase_map{selector::LoadMap(path)};
  });
}

rlx_status rlx_map_save(const rlx_paraphrase_map* map, const char* path) {
  return Guard([&] {
    Require(map, "map");
    Require(path, "path");
    selector::SaveMap(map->map, path);
  });
}

size_t rlx_map_size(const rlx_paraphrase_map* map) {
  return map == nullptr ? 0 : map->map.size();
}

rlx_status rlx_map_lookup(const rlx_paraphrase_map* map, const char* word,
                          char** paraphrase) {
  return Guard([&] {
    Require(map, "map");
    Require(word, "word");
    Require(paraphrase, "paraphrase");
    const auto it = map->map.entries.find(word);
    if (it == map->map.entries.end()) {
      throw Error(ErrorCode::kNotFound,
                  "no paraphrase for '" + std::string(word) + "'");
    }
    *paraphrase = CopyOut(it->second.text);
  });
}

rlx_status rlx_map_audit(const rlx_paraphrase_map* map,
                         const rlx_freq_table* table) {
  return Guard([&] {
    Require(map, "map");
    Require(table, "table");
    const auto problems = selector::AuditMap(map->map, table->table);
    if (!problems.empty()) {
      std::string message = "paraphrase map failed audit:";
      for (const std::string& p : problems) message += "\n  " + p;
      throw FailedPrecondition(message);
    }
  });
}

void rlx_map_free(rlx_paraphrase_map* map) { delete map; }

rlx_status rlx_augment_text(const rlx_paraphrase_map* map, const char* text,
                            char** out, size_t* annotations) {
  return Guard([&] {
    Require(map, "map");
    Require(text, "text");
    Require(out, "out");
    const augment::Annotator annotator(map->map);
    const auto result = annotator.Augment(text);
    *out = CopyOut(result.text);
    if (annotations != nullptr) *annotations = result.spans.size();
  });
}

rlx_status rlx_select_file(const char* table_path, const char* medical_path,
                           uint64_t threshold, const char* map_out,
                           const char* exclusions_out,
                           rlx_exclusions* exclusions) {
  return Guard([&] {
    Require(table_path, "table_path");
    Require(medical_path, "medical_path");
    const auto table = freqcount::LoadTable(table_path);
    const auto medical = lexicon::ParseEntries(medical_path);
    const selector::Selection selection = selector::BuildParaphraseMap(
        table, medical, selector::SelectorConfig{threshold});
    Fill(selection.exclusions, exclusions);
    if (map_out != nullptr) selector::SaveMap(selection.map, map_out);
    if (exclusions_out != nullptr) {
      WriteFile(exclusions_out, selector::SerializeExclusions(selection));
    }
  });
}

rlx_status rlx_sweep_file(const char* table_path, const char* medical_path,
                          const char* thresholds,
                          const char* const* dataset_paths, size_t n_datasets,
                          const char* out) {
  return Guard([&] {
    Require(table_path, "table_path");
    Require(medical_path, "medical_path");
    Require(thresholds, "thresholds");
    Require(out, "out");
    const auto table = freqcount::LoadTable(table_path);
    const auto medical = lexicon::ParseEntries(medical_path);
    std::vector<augment::Dataset> datasets;
    for (const std::string& path :
         Strings(dataset_paths, n_datasets, "dataset_paths")) {
      datasets.push_back(augment::LoadDataset(path));
    }
    const auto report = selector::SweepThresholds(
        table, medical, selector::ParseThresholds(thresholds), datasets);
    WriteFile(out, selector::SerializeSweep(report));
  });
}

rlx_status rlx_augment_file(const char* dataset_path, const char* map_path,
                            const char* out, const char* stats_out) {
  return Guard([&] {
    Require(dataset_path, "dataset_path");
    Require(map_path, "map_path");
    Require(out, "out");
    const auto result = augment::AugmentDataset(
        augment::LoadDataset(dataset_path), selector::LoadMap(map_path));
    augment::SaveDataset(result.dataset, out);
    if (stats_out != nullptr) {
      WriteFile(stats_out, augment::SerializeStats(result.stats));
    }
  });
}

rlx_status rlx_format_file(const char* dataset_path, const char* task,
                           const char* split, const char* out) {
  return Guard([&] {
    Require(dataset_path, "dataset_path");
    Require(task, "task");
    Require(out, "out");
    std::optional<augment::Split> only;
    if (split != nullptr) {
      only = augment::ParseSplit(split);
      if (!only) throw InvalidArgument("unknown split '" + std::string(split) + "'");
    }
    promptfmt::SavePrompts(
        promptfmt::FormatDataset(augment::LoadDataset(dataset_path),
                                 promptfmt::ParseTask(task), only),
        out);
  });
}

rlx_status rlx_sample_file(const char* dataset_path, const char* task,
                           size_t k, uint64_t seed, int full,
                           const char* train_out, const char* dev_out) {
  return Guard([&] {
    Require(dataset_path, "dataset_path");
    Require(task, "task");
    fewshot::SamplePlan plan;
    plan.task = promptfmt::ParseTask(task);
    plan.k = k;
    plan.seeds = {seed};
    plan.full = full != 0;
    plan.Validate();
    const auto split = fewshot::SampleFewShot(
        augment::LoadDataset(dataset_path), plan, seed);
    if (train_out != nullptr) {
      WriteFile(train_out, augment::SerializeExamples(split.train));
    }
    if (dev_out != nullptr) {
      WriteFile(dev_out, augment::SerializeExamples(split.dev));
    }
  });
}

rlx_status rlx_score_file(const char* prompts_path, const char* mode,
                          double paraphrase_bonus, const char* out) {
  return Guard([&] {
    Require(prompts_path, "prompts_path");
    Require(out, "out");
    pipeline::MockScorerPolicy policy;
    policy.mode = pipeline::MockScorerPolicy::ParseMode(
        mode == nullptr ? "oracle" : mode);
    policy.paraphrase_bonus = paraphrase_bonus;
    policy.Validate();
    evalstats::SavePredictions(
        pipeline::MockScoreAll(promptfmt::LoadPrompts(prompts_path), policy),
        out);
  });
}

rlx_status rlx_eval_files(const char* task, const char* gold_path,
                          const char* split, const char* const* pred_paths,
                          const char* const* baseline_paths, size_t n_seeds,
                          const char* out, char** summary) {
  return Guard([&] {
    Require(task, "task");
    Require(gold_path, "gold_path");
    const promptfmt::Task t = promptfmt::ParseTask(task);
    const auto preds = Strings(pred_paths, n_seeds, "pred_paths");
    const auto base = Strings(baseline_paths, n_seeds, "baseline_paths");
    if (n_seeds == 0) throw InvalidArgument("no prediction files");
    const augment::Dataset dataset = augment::LoadDataset(gold_path);
    std::vector<augment::Example> gold;
    if (split == nullptr) {
      gold = dataset.examples;
    } else {
      const auto s = augment::ParseSplit(split);
      if (!s) throw InvalidArgument("unknown split '" + std::string(split) + "'");
      for (const augment::Example* ex : dataset.Select(*s)) gold.push_back(*ex);
    }
    std::vector<evalstats::SeedResult> ours, baseline;
    for (size_t i = 0; i < n_seeds; ++i) {
      const int64_t seed = SeedOf(preds[i], i);
      if (SeedOf(base[i], i) != seed) {
        throw InvalidArgument("seed mismatch between " + preds[i] + " and " +
                              base[i]);
      }
      ours.push_back(
          {seed, evalstats::TaskMetric(t, evalstats::LoadPredictions(preds[i]),
                                       gold)});
      baseline.push_back(
          {seed, evalstats::TaskMetric(t, evalstats::LoadPredictions(base[i]),
                                       gold)});
    }
    const auto report = evalstats::Aggregate(ours, baseline);
    if (out != nullptr) WriteFile(out, evalstats::SerializeReport(report));
    if (summary != nullptr) {
      *summary = CopyOut(evalstats::Summarize(
          report, t == promptfmt::Task::kMedNli ? "accuracy" : "pearson"));
    }
  });
}

rlx_status rlx_validate_files(const char* pred_path, const char* prompts_path,
                              char** report) {
  return Guard([&] {
    Require(pred_path, "pred_path");
    Require(prompts_path, "prompts_path");
    const auto r = pipeline::ValidateProtocol(pred_path, prompts_path);
    if (report != nullptr) *report = CopyOut(r.ToString());
    if (!r.ok()) {
      throw FailedPrecondition(std::to_string(r.violations.size()) +
                               " protocol violation(s) in " + pred_path);
    }
  });
}

rlx_status rlx_run(const char* config_path, const char* overrides_json,
                   char** manifest_json) {
  return Guard([&] {
    Json overrides;
    if (overrides_json != nullptr && *overrides_json != '\0') {
      try {
        overrides = Json::parse(overrides_json);
      } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed overrides: ") + e.what());
      }
    }
    const auto cfg = pipeline::LoadConfig(
        config_path == nullptr ? "" : config_path, overrides);
    const auto result = pipeline::RunPipeline(cfg);
    if (manifest_json != nullptr) {
      *manifest_json = CopyOut(result.manifest.ToJson().dump(2));
    }
  });
}

rlx_status rlx_pearson(const double* x, const double* y, size_t n, double* r) {
  return Guard([&] {
    Require(r, "r");
    if (n > 0) {
      Require(x, "x");
      Require(y, "y");
    }
    *r = evalstats::Pearson({x, n}, {y, n});
  });
}

rlx_status rlx_paired_t_test(const double* a, const double* b, size_t n,
                             double* t, double* p) {
  return Guard([&] {
    if (n > 0) {
      Require(a, "a");
      Require(b, "b");
    }
    const auto result = evalstats::PairedTTest({a, n}, {b, n});
    if (t != nullptr) *t = result.t;
    if (p != nullptr) *p = result.p_two_tailed;
  });
}

double rlx_student_t_cdf(double t, double dof) {
  try {
    return evalstats::StudentTCdf(t, dof);
  } catch (...) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // extern "C"
