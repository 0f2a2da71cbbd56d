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

#ifndef RARELEX_RARELEX_H_
#define RARELEX_RARELEX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RARELEX_BUILDING_LIBRARY)
#define RARELEX_API __declspec(dllexport)
#else
#define RARELEX_API __declspec(dllimport)
#endif
#else
#define RARELEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rlx_status {
  RLX_OK = 0,
  RLX_INVALID_ARGUMENT = 1,
  RLX_NOT_FOUND = 2,
  RLX_IO = 3,
  RLX_PARSE = 4,
  RLX_FAILED_PRECONDITION = 5,
  RLX_INTERNAL = 6,
} rlx_status;

// Message for the most recent failure on the calling thread. Empty after a
// successful call. Valid until the next rarelex call on this thread.
RARELEX_API const char* rlx_last_error(void);
RARELEX_API const char* rlx_version(void);

// Frees strings returned through `char**` out-parameters.
RARELEX_API void rlx_string_free(char* s);

// ---------------------------------------------------------------------------
// Frequency tables.

typedef struct rlx_freq_table rlx_freq_table;

// threads == 0 uses the hardware concurrency.
RARELEX_API rlx_status rlx_freq_build(const char* const* paths, size_t n_paths,
                                      unsigned threads, rlx_freq_table** out);
RARELEX_API rlx_status rlx_freq_load(const char* path, rlx_freq_table** out);
RARELEX_API rlx_status rlx_freq_save(const rlx_freq_table* table,
                                     const char* path);
RARELEX_API rlx_status rlx_freq_merge(const rlx_freq_table* a,
                                      const rlx_freq_table* b,
                                      rlx_freq_table** out);
// The word is case-folded first; multi-token input counts as 0.
RARELEX_API uint64_t rlx_freq_count(const rlx_freq_table* table,
                                    const char* word);
RARELEX_API uint64_t rlx_freq_total(const rlx_freq_table* table);
RARELEX_API size_t rlx_freq_size(const rlx_freq_table* table);
RARELEX_API rlx_status rlx_freq_relative(const rlx_freq_table* table,
                                         const char* word, double* out);
RARELEX_API void rlx_freq_free(rlx_freq_table* table);

// ---------------------------------------------------------------------------
// Lexicons.

typedef struct rlx_lexicon rlx_lexicon;

typedef struct rlx_prepare_stats {
  size_t entries_in;
  size_t non_medical;
  size_t empty_glosses_dropped;
  size_t duplicate_glosses_dropped;
  size_t entries_without_gloss;
  size_t entries_out;
} rlx_prepare_stats;

RARELEX_API rlx_status rlx_lexicon_load(const char* path, rlx_lexicon** out);
// Tag filter plus gloss normalization. `tags_policy` is "default" or a comma
// separated list of tag substrings; NULL means "default". `stats` may be NULL.
RARELEX_API rlx_status rlx_lexicon_prepare(const rlx_lexicon* raw,
                                           const char* tags_policy,
                                           rlx_lexicon** out,
                                           rlx_prepare_stats* stats);
RARELEX_API rlx_status rlx_lexicon_save(const rlx_lexicon* lexicon,
                                        const char* path);
RARELEX_API size_t rlx_lexicon_size(const rlx_lexicon* lexicon);
RARELEX_API void rlx_lexicon_free(rlx_lexicon* lexicon);

// ---------------------------------------------------------------------------
// Paraphrase maps.

typedef struct rlx_paraphrase_map rlx_paraphrase_map;

typedef struct rlx_exclusions {
  uint64_t non_medical;
  uint64_t not_single_word;
  uint64_t not_rare;
  uint64_t multi_gloss;
  uint64_t rare_gloss_token;
} rlx_exclusions;

// `medical` must already be prepared (see rlx_lexicon_prepare). `exclusions`
// may be NULL.
RARELEX_API rlx_status rlx_select(const rlx_freq_table* table,
                                  const rlx_lexicon* medical,
                                  uint64_t threshold,
                                  rlx_paraphrase_map** out,
                                  rlx_exclusions* exclusions);
RARELEX_API rlx_status rlx_map_load(const char* path,
                                    rlx_paraphrase_map** out);
RARELEX_API rlx_status rlx_map_save(const rlx_paraphrase_map* map,
                                    const char* path);
RARELEX_API size_t rlx_map_size(const rlx_paraphrase_map* map);
// RLX_NOT_FOUND when the word has no entry.
RARELEX_API rlx_status rlx_map_lookup(const rlx_paraphrase_map* map,
                                      const char* word, char** paraphrase);
// RLX_FAILED_PRECONDITION when an entry breaks a selection rule against
// `table`; the message lists the offending entries.
RARELEX_API rlx_status rlx_map_audit(const rlx_paraphrase_map* map,
                                     const rlx_freq_table* table);
RARELEX_API void rlx_map_free(rlx_paraphrase_map* map);

// Inserts " (paraphrase)" after each mapped word. `annotations` may be NULL.
RARELEX_API rlx_status rlx_augment_text(const rlx_paraphrase_map* map,
                                        const char* text, char** out,
                                        size_t* annotations);

// ---------------------------------------------------------------------------
// File-level stages. Optional output paths may be NULL.

RARELEX_API rlx_status rlx_select_file(const char* table_path,
                                       const char* medical_path,
                                       uint64_t threshold,
                                       const char* map_out,
                                       const char* exclusions_out,
                                       rlx_exclusions* exclusions);
// `thresholds` is "start:stop:step" (inclusive) or a comma separated list.
RARELEX_API rlx_status rlx_sweep_file(const char* table_path,
                                      const char* medical_path,
                                      const char* thresholds,
                                      const char* const* dataset_paths,
                                      size_t n_datasets, const char* out);
RARELEX_API rlx_status rlx_augment_file(const char* dataset_path,
                                        const char* map_path, const char* out,
                                        const char* stats_out);
// `task` is "mednli" or "medsts"; `split` limits output to one split.
RARELEX_API rlx_status rlx_format_file(const char* dataset_path,
                                       const char* task, const char* split,
                                       const char* out);
RARELEX_API rlx_status rlx_sample_file(const char* dataset_path,
                                       const char* task, size_t k,
                                       uint64_t seed, int full,
                                       const char* train_out,
                                       const char* dev_out);
// Mock scorer. `mode` is "oracle" or "lexical-overlap".
RARELEX_API rlx_status rlx_score_file(const char* prompts_path,
                                      const char* mode,
                                      double paraphrase_bonus,
                                      const char* out);
// Pairs pred_paths[i] with baseline_paths[i]. `split` restricts the gold
// examples (NULL keeps all). `summary` receives the readable report.
RARELEX_API rlx_status rlx_eval_files(const char* task, const char* gold_path,
                                      const char* split,
                                      const char* const* pred_paths,
                                      const char* const* baseline_paths,
                                      size_t n_seeds, const char* out,
                                      char** summary);
// Returns RLX_OK when the predictions conform to the scorer protocol and
// RLX_FAILED_PRECONDITION when they do not; `report` lists every violation.
RARELEX_API rlx_status rlx_validate_files(const char* pred_path,
                                          const char* prompts_path,
                                          char** report);
// Runs the whole pipeline. `config_path` may be NULL when `overrides_json`
// carries every required key. `manifest_json` may be NULL.
RARELEX_API rlx_status rlx_run(const char* config_path,
                               const char* overrides_json,
                               char** manifest_json);

// ---------------------------------------------------------------------------
// Statistics.

RARELEX_API rlx_status rlx_pearson(const double* x, const double* y, size_t n,
                                   double* r);
RARELEX_API rlx_status rlx_paired_t_test(const double* a, const double* b,
                                         size_t n, double* t, double* p);
RARELEX_API double rlx_student_t_cdf(double t, double dof);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // RARELEX_RARELEX_H_
