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

#include <cmath>
#include <string>

#include "gtest/gtest.h"
#include "rarelex/rarelex.h"
#include "support/test_util.h"

namespace {

using rarelex::testing::Slurp;
using rarelex::testing::SourcePath;
using rarelex::testing::TempDir;

std::string TakeString(char* s) {
  std::string out = s == nullptr ? "" : s;
  rlx_string_free(s);
  return out;
}

class CApiTest : public ::testing::Test {
 protected:
  void SetUp() override {
    corpus_ = dir_.Write(
        "corpus.txt",
        "The patient had no fever and a rapid heart rate.\n"
        "Fever, fever, heart rate; breathing was hard, difficulty breathing.\n"
        "no no no rapid rapid difficulty\n"
        "having having\n");
    lexicon_ = dir_.Write(
        "lex.jsonl",
        R"({"word": "afebrile", "glosses": ["having no fever"], "tags": ["medical"]})"
        "\n"
        R"({"word": "tachycardia", "glosses": ["rapid heart rate"], "tags": ["medical"]})"
        "\n"
        R"({"word": "dyspnea", "glosses": ["difficulty breathing", "shortness of breath"], "tags": ["medical"]})"
        "\n"
        R"({"word": "ocean", "glosses": ["a large sea"], "tags": []})"
        "\n");
  }

  TempDir dir_;
  std::string corpus_;
  std::string lexicon_;
};

TEST_F(CApiTest, SelectAndAugment) {
  const char* paths[] = {corpus_.c_str()};
  rlx_freq_table* table = nullptr;
  ASSERT_EQ(rlx_freq_build(paths, 1, 2, &table), RLX_OK) << rlx_last_error();
  EXPECT_EQ(rlx_freq_count(table, "Fever"), 3u);
  EXPECT_EQ(rlx_freq_count(table, "heart rate"), 0u);
  EXPECT_EQ(rlx_freq_total(table), 27u);
  double rel = 0;
  ASSERT_EQ(rlx_freq_relative(table, "no", &rel), RLX_OK);
  EXPECT_DOUBLE_EQ(rel, 4.0 / 27.0);

  rlx_lexicon* raw = nullptr;
  rlx_lexicon* medical = nullptr;
  rlx_prepare_stats stats{};
  ASSERT_EQ(rlx_lexicon_load(lexicon_.c_str(), &raw), RLX_OK);
  ASSERT_EQ(rlx_lexicon_prepare(raw, nullptr, &medical, &stats), RLX_OK);
  EXPECT_EQ(stats.entries_in, 4u);
  EXPECT_EQ(stats.non_medical, 1u);
  EXPECT_EQ(rlx_lexicon_size(medical), 3u);

  rlx_paraphrase_map* map = nullptr;
  rlx_exclusions excl{};
  ASSERT_EQ(rlx_select(table, medical, 2, &map, &excl), RLX_OK);
  EXPECT_EQ(rlx_map_size(map), 2u);
  EXPECT_EQ(excl.multi_gloss, 1u);
  EXPECT_EQ(rlx_map_audit(map, table), RLX_OK);

  char* paraphrase = nullptr;
  ASSERT_EQ(rlx_map_lookup(map, "tachycardia", &paraphrase), RLX_OK);
  EXPECT_EQ(TakeString(paraphrase), "rapid heart rate");
  EXPECT_EQ(rlx_map_lookup(map, "dyspnea", &paraphrase), RLX_NOT_FOUND);

  char* text = nullptr;
  size_t n = 0;
  ASSERT_EQ(rlx_augment_text(map, "Afebrile, with tachycardia.", &text, &n),
            RLX_OK);
  EXPECT_EQ(TakeString(text),
            "Afebrile (having no fever), with tachycardia (rapid heart rate).");
  EXPECT_EQ(n, 2u);

  const std::string map_path = dir_.File("map.jsonl");
  ASSERT_EQ(rlx_map_save(map, map_path.c_str()), RLX_OK);
  rlx_paraphrase_map* loaded = nullptr;
  ASSERT_EQ(rlx_map_load(map_path.c_str(), &loaded), RLX_OK);
  EXPECT_EQ(rlx_map_size(loaded), 2u);

  // Against a table where the gloss words are unseen, every entry breaks
  // the rare-gloss rule.
  rlx_freq_table* sparse = nullptr;
  const std::string tiny = dir_.Write("tiny.txt", "fever\n");
  const char* tiny_paths[] = {tiny.c_str()};
  ASSERT_EQ(rlx_freq_build(tiny_paths, 1, 1, &sparse), RLX_OK);
  EXPECT_EQ(rlx_map_audit(loaded, sparse), RLX_FAILED_PRECONDITION);
  EXPECT_NE(std::string(rlx_last_error()).find("tachycardia"),
            std::string::npos);

  rlx_freq_table* merged = nullptr;
  ASSERT_EQ(rlx_freq_merge(table, sparse, &merged), RLX_OK);
  EXPECT_EQ(rlx_freq_count(merged, "fever"), 4u);

  rlx_freq_free(merged);
  rlx_freq_free(sparse);
  rlx_map_free(loaded);
  rlx_map_free(map);
  rlx_lexicon_free(medical);
  rlx_lexicon_free(raw);
  rlx_freq_free(table);
}

TEST_F(CApiTest, ErrorsAreReported) {
  rlx_freq_table* table = nullptr;
  EXPECT_EQ(rlx_freq_load(dir_.File("absent.tsv").c_str(), &table), RLX_IO);
  EXPECT_NE(std::string(rlx_last_error()).find("absent.tsv"),
            std::string::npos);
  EXPECT_EQ(table, nullptr);
  EXPECT_EQ(rlx_freq_load(nullptr, &table), RLX_INVALID_ARGUMENT);
  const char* paths[] = {corpus_.c_str()};
  ASSERT_EQ(rlx_freq_build(paths, 1, 1, &table), RLX_OK);
  EXPECT_STREQ(rlx_last_error(), "");
  rlx_freq_free(table);
  rlx_freq_free(nullptr);
  rlx_string_free(nullptr);

  const std::string bad = dir_.Write("bad.jsonl", "{\"word\": 3}\n");
  rlx_lexicon* lex = nullptr;
  EXPECT_EQ(rlx_lexicon_load(bad.c_str(), &lex), RLX_PARSE);
  EXPECT_EQ(rlx_run(nullptr, "{\"threshold\": 5}", nullptr),
            RLX_INVALID_ARGUMENT);
  EXPECT_EQ(rlx_run(nullptr, "{oops", nullptr), RLX_PARSE);
  EXPECT_FALSE(std::string(rlx_version()).empty());
}

TEST_F(CApiTest, Statistics) {
  const double x[] = {1, 2, 3, 4};
  const double y[] = {1, 3, 2, 4};
  double r = 0;
  ASSERT_EQ(rlx_pearson(x, y, 4, &r), RLX_OK);
  EXPECT_NEAR(r, 0.8, 1e-15);
  const double flat[] = {2, 2, 2, 2};
  EXPECT_EQ(rlx_pearson(x, flat, 4, &r), RLX_INVALID_ARGUMENT);
  double t = 0, p = 0;
  ASSERT_EQ(rlx_paired_t_test(x, x, 4, &t, &p), RLX_OK);
  EXPECT_EQ(p, 1.0);
  EXPECT_EQ(rlx_student_t_cdf(0.0, 5.0), 0.5);
  EXPECT_TRUE(std::isnan(rlx_student_t_cdf(1.0, -1.0)));
}

TEST_F(CApiTest, FileStages) {
  const std::string dataset = SourcePath("data/fixtures/mednli.jsonl");
  const std::string prompts = dir_.File("test.prompts.jsonl");
  ASSERT_EQ(rlx_format_file(dataset.c_str(), "mednli", "test", prompts.c_str()),
            RLX_OK)
      << rlx_last_error();
  const std::string preds = dir_.File("seed0.preds.jsonl");
  ASSERT_EQ(rlx_score_file(prompts.c_str(), "oracle", 0.0, preds.c_str()),
            RLX_OK);
  char* report = nullptr;
  ASSERT_EQ(rlx_validate_files(preds.c_str(), prompts.c_str(), &report),
            RLX_OK);
  rlx_string_free(report);
  EXPECT_EQ(rlx_validate_files(prompts.c_str(), preds.c_str(), &report),
            RLX_FAILED_PRECONDITION);
  rlx_string_free(report);

  const char* ours[] = {preds.c_str()};
  char* summary = nullptr;
  ASSERT_EQ(rlx_eval_files("mednli", dataset.c_str(), "test", ours, ours, 1,
                           dir_.File("report.tsv").c_str(), &summary),
            RLX_OK)
      << rlx_last_error();
  // A single seed has no paired test; p stays at 1.
  const std::string text = TakeString(summary);
  EXPECT_NE(text.find("accuracy over 1 seeds"), std::string::npos) << text;
  EXPECT_NE(text.find("1.0000"), std::string::npos) << text;

  const std::string train = dir_.File("train.jsonl");
  const std::string dev = dir_.File("dev.jsonl");
  ASSERT_EQ(rlx_sample_file(dataset.c_str(), "mednli", 16, 0, 0, train.c_str(),
                            dev.c_str()),
            RLX_OK);
  const std::string first = Slurp(train);
  ASSERT_EQ(rlx_sample_file(dataset.c_str(), "mednli", 16, 0, 0, train.c_str(),
                            dev.c_str()),
            RLX_OK);
  EXPECT_EQ(Slurp(train), first);
  EXPECT_EQ(rlx_sample_file(dataset.c_str(), "mednli", 4, 0, 0, train.c_str(),
                            dev.c_str()),
            RLX_INVALID_ARGUMENT);
}

}  // namespace
