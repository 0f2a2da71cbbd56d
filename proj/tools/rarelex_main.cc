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

// Command-line front end. Everything goes through the C API.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rarelex/rarelex.h"

namespace {

struct Failure {
  int exit_code;
};

void Check(rlx_status status, const char* what) {
  if (status == RLX_OK) return;
  std::fprintf(stderr, "rarelex %s: %s\n", what, rlx_last_error());
  throw Failure{status == RLX_FAILED_PRECONDITION ? 1 : 2};
}

struct StringDeleter {
  void operator()(char* s) const { rlx_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::vector<const char*> Pointers(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  out.reserve(v.size());
  for (const std::string& s : v) out.push_back(s.c_str());
  return out;
}

const char* OrNull(const std::string& s) {
  return s.empty() ? nullptr : s.c_str();
}

void RunFreq(const std::vector<std::string>& files, const std::string& out,
             unsigned threads) {
  const auto paths = Pointers(files);
  rlx_freq_table* table = nullptr;
  Check(rlx_freq_build(paths.data(), paths.size(), threads, &table), "freq");
  std::unique_ptr<rlx_freq_table, void (*)(rlx_freq_table*)> owned(
      table, rlx_freq_free);
  Check(rlx_freq_save(table, out.c_str()), "freq");
  std::fprintf(stderr, "%zu types, %llu tokens\n", rlx_freq_size(table),
               static_cast<unsigned long long>(rlx_freq_total(table)));
}

void RunLexicon(const std::string& in, const std::string& out,
                const std::string& policy) {
  rlx_lexicon* raw = nullptr;
  Check(rlx_lexicon_load(in.c_str(), &raw), "lexicon");
  std::unique_ptr<rlx_lexicon, void (*)(rlx_lexicon*)> owned_raw(
      raw, rlx_lexicon_free);
  rlx_lexicon* medical = nullptr;
  rlx_prepare_stats stats{};
  Check(rlx_lexicon_prepare(raw, policy.c_str(), &medical, &stats), "lexicon");
  std::unique_ptr<rlx_lexicon, void (*)(rlx_lexicon*)> owned_medical(
      medical, rlx_lexicon_free);
  Check(rlx_lexicon_save(medical, out.c_str()), "lexicon");
  std::fprintf(stderr,
               "%zu entries in, %zu non-medical, %zu without gloss, %zu out\n",
               stats.entries_in, stats.non_medical, stats.entries_without_gloss,
               stats.entries_out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rare biomedical word paraphrase pipeline"};
  app.set_version_flag("--version", std::string(rlx_version()));
  app.require_subcommand(1);

  // freq
  auto* freq = app.add_subcommand("freq", "Count word frequencies");
  std::vector<std::string> freq_files;
  std::string freq_out;
  unsigned freq_threads = 0;
  freq->add_option("files", freq_files, "Corpus files (plain or gzip)")
      ->required();
  freq->add_option("--out", freq_out, "Output TSV")->required();
  freq->add_option("--threads", freq_threads, "Worker threads (0 = all cores)");

  // lexicon
  auto* lex = app.add_subcommand("lexicon", "Filter and normalize a lexicon");
  std::string lex_in, lex_out, lex_policy = "default";
  lex->add_option("--in", lex_in, "Raw lexicon JSONL")->required();
  lex->add_option("--out", lex_out, "Medical lexicon JSONL")->required();
  lex->add_option("--tags-policy", lex_policy,
                  "\"default\" or comma separated tag substrings");

  // select
  auto* sel = app.add_subcommand("select", "Build the paraphrase map");
  std::string sel_freq, sel_lexicon, sel_out, sel_exclusions;
  uint64_t sel_threshold = 200000;
  sel->add_option("--freq", sel_freq, "Frequency table TSV")->required();
  sel->add_option("--lexicon", sel_lexicon, "Medical lexicon JSONL")
      ->required();
  sel->add_option("--threshold", sel_threshold, "Rare below this count");
  sel->add_option("--out", sel_out, "Paraphrase map JSONL")->required();
  sel->add_option("--exclusions", sel_exclusions, "Exclusion counts TSV");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Sweep the rarity threshold");
  std::string sweep_freq, sweep_lexicon, sweep_thresholds, sweep_out;
  std::vector<std::string> sweep_datasets;
  sweep->add_option("--freq", sweep_freq, "Frequency table TSV")->required();
  sweep->add_option("--lexicon", sweep_lexicon, "Medical lexicon JSONL")
      ->required();
  sweep->add_option("--thresholds", sweep_thresholds,
                    "start:stop:step or a comma separated list")
      ->required();
  sweep->add_option("--dataset", sweep_datasets, "Dataset JSONL (repeatable)");
  sweep->add_option("--out", sweep_out, "Sweep TSV")->required();

  // augment
  auto* aug = app.add_subcommand("augment", "Insert paraphrases into a dataset");
  std::string aug_map, aug_in, aug_out, aug_stats;
  aug->add_option("--map", aug_map, "Paraphrase map JSONL")->required();
  aug->add_option("--in", aug_in, "Dataset JSONL")->required();
  aug->add_option("--out", aug_out, "Augmented dataset JSONL")->required();
  aug->add_option("--stats", aug_stats, "Per-split annotation counts TSV");

  // format
  auto* fmt = app.add_subcommand("format", "Render cloze prompts");
  std::string fmt_task, fmt_in, fmt_out, fmt_split;
  fmt->add_option("--task", fmt_task, "mednli or medsts")->required();
  fmt->add_option("--in", fmt_in, "Dataset JSONL")->required();
  fmt->add_option("--out", fmt_out, "Prompt JSONL")->required();
  fmt->add_option("--split", fmt_split, "Only this split");

  // sample
  auto* sample = app.add_subcommand("sample", "Draw a few-shot train/dev split");
  std::string sample_task, sample_in, sample_train, sample_dev;
  size_t sample_k = 16;
  uint64_t sample_seed = 0;
  bool sample_full = false;
  sample->add_option("--task", sample_task, "mednli or medsts")->required();
  sample->add_option("--k", sample_k, "Examples per split");
  sample->add_option("--seed", sample_seed, "Sampling seed");
  sample->add_flag("--full", sample_full, "Allow k outside [16, 256]");
  sample->add_option("--in", sample_in, "Dataset JSONL")->required();
  sample->add_option("--out-train", sample_train, "Train JSONL");
  sample->add_option("--out-dev", sample_dev, "Dev JSONL");

  // score
  auto* score = app.add_subcommand("score", "Score prompts with the mock scorer");
  std::string score_in, score_out, score_mode = "oracle";
  double score_bonus = 0.0;
  score->add_option("--in", score_in, "Prompt JSONL")->required();
  score->add_option("--out", score_out, "Prediction JSONL")->required();
  score->add_option("--mode", score_mode, "oracle or lexical-overlap");
  score->add_option("--paraphrase-bonus", score_bonus,
                    "Extra Yes score per parenthetical (lexical-overlap)");

  // eval
  auto* eval = app.add_subcommand("eval", "Aggregate per-seed predictions");
  std::string eval_task, eval_gold, eval_out, eval_split;
  std::vector<std::string> eval_pred, eval_base;
  eval->add_option("--task", eval_task, "mednli or medsts")->required();
  eval->add_option("--gold", eval_gold, "Gold dataset JSONL")->required();
  eval->add_option("--split", eval_split, "Only gold examples of this split");
  eval->add_option("--pred", eval_pred, "Prediction files, one per seed")
      ->required();
  eval->add_option("--baseline-pred", eval_base,
                   "Baseline prediction files, same seeds")
      ->required();
  eval->add_option("--out", eval_out, "Report TSV");

  // validate
  auto* val = app.add_subcommand("validate", "Check scorer output");
  std::string val_pred, val_prompts;
  val->add_option("--pred", val_pred, "Prediction JSONL")->required();
  val->add_option("--prompts", val_prompts, "Prompt JSONL")->required();

  // run
  auto* run = app.add_subcommand("run", "Run the whole pipeline");
  std::string run_config;
  run->add_option("--config", run_config, "Config JSON")
      ->check(CLI::ExistingFile);
  std::vector<std::string> run_corpus;
  std::string run_lexicon, run_dataset, run_out, run_task, run_scorer,
      run_scorer_cmd, run_mock_mode, run_policy;
  std::optional<uint64_t> run_threshold;
  std::vector<size_t> run_k;
  std::vector<uint64_t> run_seeds;
  std::optional<double> run_bonus;
  std::optional<unsigned> run_threads;
  bool run_full = false, run_no_augment = false;
  run->add_option("--corpus", run_corpus, "Corpus files");
  run->add_option("--lexicon", run_lexicon, "Raw lexicon JSONL");
  run->add_option("--dataset", run_dataset, "Dataset JSONL");
  run->add_option("--out-dir", run_out, "Output directory");
  run->add_option("--threshold", run_threshold, "Rarity threshold");
  run->add_option("--task", run_task, "mednli or medsts");
  run->add_option("--k", run_k, "Shots per split (repeatable)")
      ->delimiter(',');
  run->add_option("--seeds", run_seeds, "Seeds")->delimiter(',');
  run->add_option("--scorer", run_scorer, "mock or external");
  run->add_option("--scorer-cmd", run_scorer_cmd, "External scorer command");
  run->add_option("--mock-mode", run_mock_mode, "oracle or lexical-overlap");
  run->add_option("--paraphrase-bonus", run_bonus, "Mock lexical-overlap bonus");
  run->add_option("--tags-policy", run_policy, "Medical tag policy");
  run->add_option("--threads", run_threads, "Counting threads");
  run->add_flag("--full", run_full, "Allow k outside [16, 256]");
  run->add_flag("--no-augment", run_no_augment,
                "Skip paraphrase insertion (baseline only)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (freq->parsed()) {
      RunFreq(freq_files, freq_out, freq_threads);
    } else if (lex->parsed()) {
      RunLexicon(lex_in, lex_out, lex_policy);
    } else if (sel->parsed()) {
      rlx_exclusions x{};
      Check(rlx_select_file(sel_freq.c_str(), sel_lexicon.c_str(),
                            sel_threshold, sel_out.c_str(),
                            OrNull(sel_exclusions), &x),
            "select");
      std::fprintf(stderr,
                   "excluded: %llu not single word, %llu not rare, "
                   "%llu multi-gloss, %llu rare gloss token\n",
                   static_cast<unsigned long long>(x.not_single_word),
                   static_cast<unsigned long long>(x.not_rare),
                   static_cast<unsigned long long>(x.multi_gloss),
                   static_cast<unsigned long long>(x.rare_gloss_token));
    } else if (sweep->parsed()) {
      const auto paths = Pointers(sweep_datasets);
      Check(rlx_sweep_file(sweep_freq.c_str(), sweep_lexicon.c_str(),
                           sweep_thresholds.c_str(), paths.data(), paths.size(),
                           sweep_out.c_str()),
            "sweep");
    } else if (aug->parsed()) {
      Check(rlx_augment_file(aug_in.c_str(), aug_map.c_str(), aug_out.c_str(),
                             OrNull(aug_stats)),
            "augment");
    } else if (fmt->parsed()) {
      Check(rlx_format_file(fmt_in.c_str(), fmt_task.c_str(),
                            OrNull(fmt_split), fmt_out.c_str()),
            "format");
    } else if (sample->parsed()) {
      Check(rlx_sample_file(sample_in.c_str(), sample_task.c_str(), sample_k,
                            sample_seed, sample_full, OrNull(sample_train),
                            OrNull(sample_dev)),
            "sample");
    } else if (score->parsed()) {
      Check(rlx_score_file(score_in.c_str(), score_mode.c_str(), score_bonus,
                           score_out.c_str()),
            "score");
    } else if (eval->parsed()) {
      if (eval_pred.size() != eval_base.size()) {
        std::fprintf(stderr,
                     "rarelex eval: %zu --pred files but %zu --baseline-pred\n",
                     eval_pred.size(), eval_base.size());
        return 2;
      }
      const auto preds = Pointers(eval_pred);
      const auto base = Pointers(eval_base);
      char* summary = nullptr;
      Check(rlx_eval_files(eval_task.c_str(), eval_gold.c_str(),
                           OrNull(eval_split), preds.data(), base.data(),
                           preds.size(), OrNull(eval_out), &summary),
            "eval");
      OwnedString owned(summary);
      std::fputs(summary, stdout);
    } else if (val->parsed()) {
      char* report = nullptr;
      const rlx_status status =
          rlx_validate_files(val_pred.c_str(), val_prompts.c_str(), &report);
      OwnedString owned(report);
      if (report != nullptr) std::fputs(report, stdout);
      Check(status, "validate");
    } else if (run->parsed()) {
      nlohmann::ordered_json overrides = nlohmann::ordered_json::object();
      if (!run_corpus.empty()) overrides["corpus"] = run_corpus;
      if (!run_lexicon.empty()) overrides["lexicon"] = run_lexicon;
      if (!run_dataset.empty()) overrides["dataset"] = run_dataset;
      if (!run_out.empty()) overrides["out_dir"] = run_out;
      if (run_threshold) overrides["threshold"] = *run_threshold;
      if (!run_task.empty()) overrides["task"] = run_task;
      if (!run_k.empty()) overrides["k"] = run_k;
      if (!run_seeds.empty()) overrides["seeds"] = run_seeds;
      if (!run_scorer.empty()) overrides["scorer"] = run_scorer;
      if (!run_scorer_cmd.empty()) overrides["scorer_cmd"] = run_scorer_cmd;
      if (!run_mock_mode.empty()) overrides["mock_mode"] = run_mock_mode;
      if (run_bonus) overrides["paraphrase_bonus"] = *run_bonus;
      if (!run_policy.empty()) overrides["tags_policy"] = run_policy;
      if (run_threads) overrides["threads"] = *run_threads;
      if (run_full) overrides["full"] = true;
      if (run_no_augment) overrides["augment"] = false;
      char* manifest = nullptr;
      Check(rlx_run(OrNull(run_config), overrides.dump().c_str(), &manifest),
            "run");
      OwnedString owned(manifest);
      std::puts(manifest);
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return 0;
}
