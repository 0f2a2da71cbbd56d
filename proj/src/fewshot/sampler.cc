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

#include "fewshot/sampler.h"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "common/error.h"

namespace rarelex::fewshot {

using augment::Dataset;
using augment::Example;
using augment::Split;

void SamplePlan::Validate() const {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (!full && (k < kMinShots || k > kMaxShots)) {
    throw InvalidArgument("k = " + std::to_string(k) + " is outside [" +
                          std::to_string(kMinShots) + ", " +
                          std::to_string(kMaxShots) +
                          "]; use full mode for larger samples");
  }
  std::unordered_set<uint64_t> seen;
  for (uint64_t s : seeds) {
    if (!seen.insert(s).second) {
      throw InvalidArgument("duplicate seed " + std::to_string(s));
    }
  }
}

std::vector<std::string> SeededShuffle(std::vector<std::string> ids,
                                       SplitMix64* rng) {
  std::sort(ids.begin(), ids.end());
  for (size_t i = ids.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng->UniformBelow(i));
    std::swap(ids[i - 1], ids[j]);
  }
  return ids;
}

namespace {

std::vector<std::string> IdsOf(const Dataset& ds, Split split) {
  std::vector<std::string> ids;
  for (const Example& e : ds.examples) {
    if (e.split == split) ids.push_back(e.id);
  }
  return ids;
}

void RequireAtLeast(size_t needed, size_t available, const char* what) {
  if (available < needed) {
    throw FailedPrecondition("insufficient examples in " + std::string(what) +
                             ": need " + std::to_string(needed) + ", have " +
                             std::to_string(available));
  }
}

}  // namespace

FewShotSplit SampleFewShot(const Dataset& dataset, const SamplePlan& plan,
                           uint64_t seed) {
  if (plan.k < 1) throw InvalidArgument("k must be >= 1");
  std::unordered_map<std::string, const Example*> by_id;
  for (const Example& e : dataset.examples) by_id.emplace(e.id, &e);

  SplitMix64 rng(seed);
  const auto train_ids = SeededShuffle(IdsOf(dataset, Split::kTrain), &rng);
  FewShotSplit out;
  const auto take = [&](const std::vector<std::string>& ids, size_t from,
                        size_t n, std::vector<Example>* into) {
    for (size_t i = from; i < from + n; ++i) into->push_back(*by_id.at(ids[i]));
  };

  if (plan.task == promptfmt::Task::kMedSts) {
    RequireAtLeast(2 * plan.k, train_ids.size(), "train split (train + dev)");
    take(train_ids, 0, plan.k, &out.train);
    take(train_ids, plan.k, plan.k, &out.dev);
    return out;
  }

  RequireAtLeast(plan.k, train_ids.size(), "train split");
  const auto dev_ids = SeededShuffle(IdsOf(dataset, Split::kDev), &rng);
  size_t dev_k = plan.k;
  if (plan.full) dev_k = std::min(dev_k, dev_ids.size());
  RequireAtLeast(dev_k, dev_ids.size(), "dev split");
  take(train_ids, 0, plan.k, &out.train);
  take(dev_ids, 0, dev_k, &out.dev);
  return out;
}

}  // namespace rarelex::fewshot
