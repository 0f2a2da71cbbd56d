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

#include "evalstats/evaluation.h"

#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "common/error.h"
#include "common/jsonl.h"
#include "common/text_io.h"
#include "evalstats/stats.h"

namespace rarelex::evalstats {

using augment::Example;
using promptfmt::PromptTemplate;

std::string SerializePredictions(const std::vector<PredictionRecord>& preds) {
  std::string out;
  for (const PredictionRecord& p : preds) {
    Json obj;
    obj["id"] = p.example_id;
    Json scores = Json::object();
    for (const auto& [token, score] : p.scores) scores[token] = score;
    obj["scores"] = std::move(scores);
    out += ToJsonLine(obj);
  }
  return out;
}

void SavePredictions(const std::vector<PredictionRecord>& preds,
                     const std::string& path) {
  WriteFile(path, SerializePredictions(preds));
}

std::vector<PredictionRecord> LoadPredictions(const std::string& path) {
  std::vector<PredictionRecord> out;
  ForEachJsonLine(path, [&](const Json& obj, size_t line) {
    const std::string where = Where(path, line);
    PredictionRecord p;
    const auto id = obj.find("id");
    if (id == obj.end() || !id->is_string()) {
      throw ParseError(where + ": missing required field 'id'");
    }
    p.example_id = id->get<std::string>();
    const auto scores = obj.find("scores");
    if (scores == obj.end() || !scores->is_object()) {
      throw ParseError(where + ": missing required field 'scores'");
    }
    for (const auto& [token, value] : scores->items()) {
      if (!value.is_number()) {
        throw ParseError(where + ": score for '" + token + "' is not a number");
      }
      p.scores[token] = value.get<double>();
    }
    if (p.scores.empty()) throw ParseError(where + ": empty scores");
    out.push_back(std::move(p));
  });
  return out;
}

const std::string& ArgmaxToken(const PredictionRecord& pred,
                               const PromptTemplate& tpl) {
  const std::string* best = nullptr;
  double best_score = 0.0;
  for (const auto& v : tpl.verbalizers()) {
    const auto it = pred.scores.find(v.token);
    if (it == pred.scores.end() || std::isnan(it->second)) continue;
    if (best == nullptr || it->second > best_score) {
      best = &v.token;
      best_score = it->second;
    }
  }
  if (best == nullptr) {
    throw InvalidArgument("prediction '" + pred.example_id +
                          "' scores none of the verbalizer tokens");
  }
  return *best;
}

namespace {

// Gold-ordered predictions; rejects missing, duplicate and unknown ids.
std::vector<const PredictionRecord*> Align(
    std::span<const PredictionRecord> preds, std::span<const Example> gold) {
  std::unordered_map<std::string, const PredictionRecord*> by_id;
  for (const PredictionRecord& p : preds) {
    if (!by_id.emplace(p.example_id, &p).second) {
      throw InvalidArgument("duplicate prediction for id '" + p.example_id +
                            "'");
    }
  }
  std::vector<const PredictionRecord*> aligned;
  aligned.reserve(gold.size());
  for (const Example& e : gold) {
    const auto it = by_id.find(e.id);
    if (it == by_id.end()) {
      throw InvalidArgument("no prediction for id '" + e.id + "'");
    }
    aligned.push_back(it->second);
    by_id.erase(it);
  }
  if (!by_id.empty()) {
    throw InvalidArgument("prediction for unknown id '" +
                          by_id.begin()->first + "'");
  }
  return aligned;
}

}  // namespace

double Accuracy(std::span<const PredictionRecord> preds,
                std::span<const Example> gold, const PromptTemplate& tpl) {
  if (gold.empty()) throw InvalidArgument("accuracy over an empty gold set");
  const auto aligned = Align(preds, gold);
  size_t correct = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    if (!gold[i].label.is_name()) {
      throw InvalidArgument("gold '" + gold[i].id + "' has no class label");
    }
    const std::string& label = tpl.Unverbalize(ArgmaxToken(*aligned[i], tpl));
    correct += label == gold[i].label.name();
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

std::vector<double> PredictedSimilarity(std::span<const PredictionRecord> preds,
                                        std::span<const Example> gold,
                                        const PromptTemplate& tpl) {
  const std::string& yes = tpl.Verbalize("similar");
  const std::string& no = tpl.Verbalize("dissimilar");
  const auto aligned = Align(preds, gold);
  std::vector<double> out;
  out.reserve(gold.size());
  for (const PredictionRecord* p : aligned) {
    const auto y = p->scores.find(yes);
    const auto n = p->scores.find(no);
    if (y == p->scores.end() || n == p->scores.end()) {
      throw InvalidArgument("prediction '" + p->example_id +
                            "' lacks a Yes or No score");
    }
    // Two-way softmax, written to stay finite for large score gaps.
    const double p_yes = 1.0 / (1.0 + std::exp(n->second - y->second));
    out.push_back(promptfmt::PredictionToScore(p_yes, 1.0 - p_yes));
  }
  return out;
}

double TaskMetric(promptfmt::Task task,
                  std::span<const PredictionRecord> preds,
                  std::span<const Example> gold) {
  const PromptTemplate tpl = PromptTemplate::ForTask(task);
  if (task == promptfmt::Task::kMedNli) return Accuracy(preds, gold, tpl);
  const std::vector<double> predicted = PredictedSimilarity(preds, gold, tpl);
  std::vector<double> truth;
  truth.reserve(gold.size());
  for (const Example& e : gold) {
    if (!e.label.is_score()) {
      throw InvalidArgument("gold '" + e.id + "' has no similarity score");
    }
    truth.push_back(e.label.score());
  }
  return Pearson(predicted, truth);
}

EvalReport Aggregate(std::span<const SeedResult> ours,
                     std::span<const SeedResult> baseline) {
  if (ours.size() != baseline.size()) {
    throw InvalidArgument("seed count mismatch: " +
                          std::to_string(ours.size()) + " runs vs " +
                          std::to_string(baseline.size()) + " baseline runs");
  }
  if (ours.empty()) throw InvalidArgument("no runs to aggregate");
  std::vector<double> a, b;
  for (size_t i = 0; i < ours.size(); ++i) {
    if (ours[i].seed != baseline[i].seed) {
      throw InvalidArgument("seed order differs at position " +
                            std::to_string(i) + ": " +
                            std::to_string(ours[i].seed) + " vs " +
                            std::to_string(baseline[i].seed));
    }
    a.push_back(ours[i].value);
    b.push_back(baseline[i].value);
  }
  EvalReport r;
  r.per_seed.assign(ours.begin(), ours.end());
  r.baseline_per_seed.assign(baseline.begin(), baseline.end());
  r.n = a.size();
  r.mean = Mean(a);
  r.std = PopulationStd(a);
  r.baseline_mean = Mean(b);
  r.baseline_std = PopulationStd(b);
  r.delta = r.mean - r.baseline_mean;
  if (r.n >= 2) {
    const TTestResult tt = PairedTTest(a, b);
    r.t = tt.t;
    r.p_value = tt.p_two_tailed;
  }
  r.significant = r.p_value < kSignificanceLevel;
  return r;
}

namespace {

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string SerializeReport(const EvalReport& r) {
  std::string out = "seed\tours\tbaseline\n";
  for (size_t i = 0; i < r.per_seed.size(); ++i) {
    out += std::to_string(r.per_seed[i].seed) + "\t" +
           Num(r.per_seed[i].value) + "\t" +
           Num(r.baseline_per_seed[i].value) + "\n";
  }
  out += "#n\t" + std::to_string(r.n) + "\n";
  out += "#mean\t" + Num(r.mean) + "\t" + Num(r.baseline_mean) + "\n";
  out += "#std\t" + Num(r.std) + "\t" + Num(r.baseline_std) + "\n";
  out += "#delta\t" + Num(r.delta) + "\n";
  out += "#t\t" + Num(r.t) + "\n";
  out += "#p_value\t" + Num(r.p_value) + "\n";
  out += std::string("#significant\t") + (r.significant ? "yes" : "no") + "\n";
  return out;
}

std::string Summarize(const EvalReport& r, std::string_view metric) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf, "%.*s over %zu seeds\n",
                static_cast<int>(metric.size()), metric.data(), r.n);
  out += buf;
  std::snprintf(buf, sizeof buf, "  paraphrase  %.4f ± %.4f\n", r.mean, r.std);
  out += buf;
  std::snprintf(buf, sizeof buf, "  baseline    %.4f ± %.4f\n",
                r.baseline_mean, r.baseline_std);
  out += buf;
  std::snprintf(buf, sizeof buf, "  delta %+.4f, paired t-test p = %.4g%s\n",
                r.delta, r.p_value, r.significant ? " (p < 0.05)" : "");
  out += buf;
  return out;
}

}  // namespace rarelex::evalstats
