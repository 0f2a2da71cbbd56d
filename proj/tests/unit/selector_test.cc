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

#include "selector/selector.h"

#include <string>
#include <vector>

#include "augment/dataset.h"
#include "common/error.h"
#include "gtest/gtest.h"
#include "selector/sweep.h"
#include "support/test_util.h"

namespace rarelex::selector {
namespace {

using freqcount::CountMap;
using freqcount::FrequencyTable;
using lexicon::DictionaryEntry;

DictionaryEntry Entry(std::string word, std::vector<std::string> glosses,
                      bool abbrev = false) {
  return {std::move(word), std::move(glosses), {"medical"}, abbrev};
}

// Counts chosen so that everything used in glosses is common at 200,000.
FrequencyTable CommonTable() {
  return FrequencyTable(CountMap{{"having", 900000},
                                 {"no", 5000000},
                                 {"fever", 400000},
                                 {"congestive", 250000},
                                 {"heart", 3000000},
                                 {"failure", 800000},
                                 {"chf", 350000},
                                 {"afebrile", 100000},
                                 {"boundary", 199999},
                                 {"edge", 200000},
                                 {"erythrocytes", 1200}},
                        {"synthetic"});
}

TEST(IsRareTest, StrictBoundary) {
  const FrequencyTable t = CommonTable();
  const SelectorConfig cfg{200000};
  EXPECT_TRUE(IsRare(t, "boundary", cfg));
  EXPECT_FALSE(IsRare(t, "edge", cfg));
  EXPECT_TRUE(IsRare(t, "absent", cfg));
}

TEST(SelectorConfigTest, ThresholdMustBePositive) {
  EXPECT_THROW(SelectorConfig{0}.Validate(), Error);
  EXPECT_NO_THROW(SelectorConfig{1}.Validate());
}

TEST(BuildParaphraseMapTest, Examples) {
  const FrequencyTable t = CommonTable();
  const std::vector<DictionaryEntry> medical = {
      Entry("afebrile", {"having no fever"}),
      Entry("boundary", {"having no fever", "heart failure"}),
      Entry("CHF", {"congestive heart failure"}, true),
  };
  const Selection s = BuildParaphraseMap(t, medical, SelectorConfig{});
  ASSERT_EQ(s.map.size(), 2u);
  EXPECT_EQ(s.map.entries.at("afebrile").text, "having no fever");
  EXPECT_FALSE(s.map.entries.at("afebrile").is_abbreviation);
  // Included through the abbreviation rule despite a count >= threshold.
  EXPECT_EQ(s.map.entries.at("CHF").text, "congestive heart failure");
  EXPECT_TRUE(s.map.entries.at("CHF").is_abbreviation);
  EXPECT_EQ(s.exclusions.multi_gloss, 1u);
  EXPECT_EQ(s.exclusions.total(), 1u);
  EXPECT_EQ(s.rare_words, (std::set<std::string>{"afebrile", "boundary"}));
  EXPECT_TRUE(AuditMap(s.map, t).empty());
}

TEST(BuildParaphraseMapTest, EachRuleCountsUnderItsOwnCounter) {
  const FrequencyTable t = CommonTable();
  const std::vector<DictionaryEntry> medical = {
      Entry("heart attack", {"heart failure"}),           // not a single word
      Entry("fever", {"having heart failure"}),           // rule (a)
      Entry("afebrile", {"having no fever", "no fever"}), // rule (b)
      Entry("hemolysis", {"rupture of erythrocytes"}),    // rule (c)
      Entry("ABC", {"heart failure", "no fever"}, true),  // (b) for abbrevs
      Entry("XYZ", {"congestive erythrocytes"}, true),    // (c) for abbrevs
  };
  const Selection s = BuildParaphraseMap(t, medical, SelectorConfig{});
  EXPECT_TRUE(s.map.empty());
  EXPECT_EQ(s.exclusions.not_single_word, 1u);
  EXPECT_EQ(s.exclusions.not_rare, 1u);
  EXPECT_EQ(s.exclusions.multi_gloss, 2u);
  EXPECT_EQ(s.exclusions.rare_gloss_token, 2u);
}

TEST(BuildParaphraseMapTest, GlossMayMentionItsOwnHeadword) {
  const FrequencyTable t = CommonTable();
  const Selection s = BuildParaphraseMap(
      t, {Entry("afebrile", {"afebrile having no fever"})}, SelectorConfig{});
  EXPECT_EQ(s.map.size(), 1u);
}

TEST(BuildParaphraseMapTest, EmptyListAndEmptyTable) {
  EXPECT_TRUE(BuildParaphraseMap(CommonTable(), {}, SelectorConfig{})
                  .map.empty());
  try {
    BuildParaphraseMap(FrequencyTable(), {Entry("a", {"b"})},
                       SelectorConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFailedPrecondition);
  }
}

TEST(BuildParaphraseMapTest, DeterministicSerialization) {
  const FrequencyTable t = CommonTable();
  std::vector<DictionaryEntry> a = {Entry("afebrile", {"having no fever"}),
                                    Entry("CHF", {"heart failure"}, true)};
  std::vector<DictionaryEntry> b = {a[1], a[0]};
  EXPECT_EQ(SerializeMap(BuildParaphraseMap(t, a, SelectorConfig{}).map),
            SerializeMap(BuildParaphraseMap(t, b, SelectorConfig{}).map));
  EXPECT_EQ(SerializeMap(BuildParaphraseMap(t, a, SelectorConfig{}).map),
            "{\"word\":\"CHF\",\"paraphrase\":\"heart failure\",\"abbrev\":true}\n"
            "{\"word\":\"afebrile\",\"paraphrase\":\"having no fever\","
            "\"abbrev\":false}\n");
}

TEST(SelectFromLexiconTest, CountsNonMedical) {
  std::vector<DictionaryEntry> raw = {
      Entry("afebrile", {"having no fever."}),
      {"kayak", {"small boat"}, {"nautical"}, false},
  };
  const Selection s =
      SelectFromLexicon(CommonTable(), raw, lexicon::MedicalTagPolicy::Default(),
                        SelectorConfig{});
  EXPECT_EQ(s.exclusions.non_medical, 1u);
  EXPECT_EQ(s.map.entries.at("afebrile").text, "having no fever");
}

TEST(AuditMapTest, FlagsEveryBrokenInvariant) {
  const FrequencyTable t = CommonTable();
  ParaphraseMap map;
  map.config = SelectorConfig{200000};
  map.entries["fever"] = {"having no fever", false};      // not rare
  map.entries["afebrile"] = {"rupture of erythrocytes", false};  // rare gloss
  map.entries["two words"] = {"x", false};
  const auto problems = AuditMap(map, t);
  EXPECT_EQ(problems.size(), 3u);
}

TEST(ParaphraseMapTest, SaveLoadRoundTrip) {
  testing::TempDir dir;
  ParaphraseMap map;
  map.entries["CHF"] = {"congestive heart failure", true};
  map.entries["afebrile"] = {"having no fever", false};
  SaveMap(map, dir.File("m.jsonl"));
  const ParaphraseMap back = LoadMap(dir.File("m.jsonl"));
  EXPECT_EQ(back.entries, map.entries);
  EXPECT_THROW(LoadMap(dir.Write("bad.jsonl", "{\"word\":\"x\"}\n")), Error);
}

// Five words with hand-picked counts; map sizes below were enumerated by
// hand for each threshold.
//   alpha 10 (gloss "beta"), beta 100, gamma 1000 (gloss "delta"),
//   delta 10000, omega 3 (glosses "beta", "delta").
TEST(SweepTest, HandEnumeratedFiveWordFixture) {
  const FrequencyTable t(CountMap{{"alpha", 10}, {"beta", 100},
                                  {"gamma", 1000}, {"delta", 10000},
                                  {"omega", 3}},
                         {});
  const std::vector<DictionaryEntry> medical = {
      Entry("alpha", {"beta"}),
      Entry("beta", {"delta"}),
      Entry("gamma", {"delta"}),
      Entry("delta", {"alpha beta"}),
      Entry("omega", {"beta", "delta"}),
  };
  const SweepReport r = SweepThresholds(t, medical, {50, 500}, {});
  ASSERT_EQ(r.rows.size(), 2u);
  // 50: rare = {alpha, omega}; alpha's gloss "beta" (100) is common -> in;
  // omega has two glosses -> out. Map {alpha}.
  EXPECT_EQ(r.rows[0].rare_words, 2u);
  EXPECT_EQ(r.rows[0].map_size, 1u);
  // 500: rare = {alpha, beta, omega}; alpha's gloss "beta" is now rare ->
  // out; beta's gloss "delta" is common -> in. Map {beta}.
  EXPECT_EQ(r.rows[1].rare_words, 3u);
  EXPECT_EQ(r.rows[1].map_size, 1u);
  EXPECT_EQ(r.rows[1].exclusions.rare_gloss_token, 1u);
  EXPECT_EQ(r.rows[1].exclusions.multi_gloss, 1u);
  EXPECT_EQ(r.rows[1].exclusions.not_rare, 2u);
}

TEST(SweepTest, SingleThresholdMatchesBuild) {
  const FrequencyTable t = CommonTable();
  const std::vector<DictionaryEntry> medical = {
      Entry("afebrile", {"having no fever"}),
      Entry("boundary", {"having no fever", "heart failure"}),
      Entry("CHF", {"congestive heart failure"}, true),
      Entry("fever", {"no fever"})};
  const Selection s = BuildParaphraseMap(t, medical, SelectorConfig{200000});
  const SweepReport r = SweepThresholds(t, medical, {200000}, {});
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].map_size, s.map.size());
  EXPECT_EQ(r.rows[0].rare_words, s.rare_words.size());
  EXPECT_EQ(r.rows[0].exclusions, s.exclusions);
}

TEST(SweepTest, RareSetGrowsWithThreshold) {
  const FrequencyTable t = CommonTable();
  std::vector<DictionaryEntry> medical;
  for (const auto& [w, c] : t.counts()) medical.push_back(Entry(w, {"no"}));
  size_t previous = 0;
  const SweepReport r = SweepThresholds(
      t, medical, ParseThresholds("20000:200000:20000"), {});
  for (const SweepRow& row : r.rows) {
    EXPECT_GE(row.rare_words, previous);
    previous = row.rare_words;
  }
}

TEST(ParseThresholdsTest, RangesAndLists) {
  const auto grid = ParseThresholds("20000:200000:20000");
  ASSERT_EQ(grid.size(), 10u);
  EXPECT_EQ(grid.front(), 20000u);
  EXPECT_EQ(grid.back(), 200000u);
  EXPECT_EQ(ParseThresholds("5,50,500"), (std::vector<uint64_t>{5, 50, 500}));
  EXPECT_THROW(ParseThresholds("1:10:0"), Error);
  EXPECT_THROW(ParseThresholds("x"), Error);
  EXPECT_THROW(ParseThresholds(""), Error);
  const FrequencyTable t = CommonTable();
  EXPECT_THROW(SweepThresholds(t, {}, {500, 50}, {}), Error);
  EXPECT_THROW(SweepThresholds(t, {}, {}, {}), Error);
}

TEST(SweepTest, SerializesDatasetColumns) {
  const FrequencyTable t = CommonTable();
  augment::Dataset ds;
  ds.name = "mini";
  augment::Example ex;
  ex.id = "1";
  ex.sentence1 = "Afebrile, afebrile and CHF.";
  ex.sentence2 = "ok";
  ex.label = augment::Label(std::string("neutral"));
  ex.split = augment::Split::kTest;
  ds.examples.push_back(ex);
  const SweepReport r = SweepThresholds(
      t, {Entry("afebrile", {"having no fever"}),
          Entry("CHF", {"congestive heart failure"}, true)},
      {200000}, {ds});
  const std::string tsv = SerializeSweep(r);
  EXPECT_NE(tsv.find("mini.test.distinct\tmini.test.total"), std::string::npos)
      << tsv;
  EXPECT_NE(tsv.find("\t2\t3\n"), std::string::npos) << tsv;
}

}  // namespace
}  // namespace rarelex::selector
