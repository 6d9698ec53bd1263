//
// Copyright 2026 The Orthonoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// End-to-end evaluation of a Translator: noise invariance (10NT-TER), BLEU on
// clean and noised test sets, and paired bootstrap significance.

#ifndef ORTHONOISE_HARNESS_H_
#define ORTHONOISE_HARNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthonoise/augment.h"
#include "orthonoise/metrics.h"
#include "orthonoise/noise.h"
#include "orthonoise/text_model.h"
#include "orthonoise/translator.h"

namespace orthonoise {

// Translates `inputs` in batches of `batch_size`, checking the output count.
// Failures are rethrown as TranslatorError naming the batch and the index of
// its first sentence.
std::vector<std::string> TranslateAll(Translator& translator,
                                      std::span<const std::string> inputs,
                                      size_t batch_size);

// Variant j of sentence i under `type`: DeriveSeed(seed, {i, code, j}).
uint64_t VariantSeed(uint64_t seed, size_t sentence, NoiseType type,
                     size_t variant);

struct TypeRobustness {
  NoiseType noise_type;
  double mean_10nt_ter = 0.0;  // macro average over scored sentences
  size_t sentences = 0;        // sentences with at least one noised variant
  size_t noops = 0;            // variants where noise found no edit site
};

struct RobustnessReport {
  std::vector<TypeRobustness> per_type;
  double overall = 0.0;  // unweighted mean of the per-type means
  std::string profile;
  uint64_t seed = 0;
  std::string translator_id;
  size_t variants_per_sentence = 10;
  size_t skipped_sentences = 0;  // original translation had no tokens
  std::optional<std::string> timestamp;
};

struct EvalOptions {
  size_t variants_per_sentence = 10;
  int edits_per_sentence = 1;
  size_t batch_size = 256;
  int jobs = 1;
};

// For every sentence and type, translates the original and its noised
// variants and averages TER against the original's translation. Variants
// that no-op are not translated; they count towards `noops`.
RobustnessReport EvaluateRobustness(Translator& translator,
                                    std::span<const std::string> test_sentences,
                                    std::span<const NoiseType> noise_types,
                                    const LanguageProfile& profile,
                                    const Lexicon& lexicon, uint64_t seed,
                                    const EvalOptions& options = {});

nlohmann::ordered_json RobustnessReportJson(const RobustnessReport& report);
// Systems as rows, noise types as columns, plus the macro average.
std::string FormatRobustnessTable(std::span<const RobustnessReport> reports);

struct QualityCondition {
  std::string condition;  // "clean" or a noise type name
  BleuScore bleu;
  size_t noops = 0;
};

struct QualityTable {
  std::string system;
  std::vector<QualityCondition> conditions;  // clean first, then per type
};

// BLEU of the system on the clean test set and on one noised copy of the
// source side per noise type; references are never noised.
QualityTable EvaluateQuality(Translator& translator,
                             const ParallelCorpus& test_corpus,
                             std::span<const NoiseType> noise_types,
                             const LanguageProfile& profile,
                             const Lexicon& lexicon, uint64_t seed,
                             const EvalOptions& options = {});

nlohmann::ordered_json QualityTablesJson(std::span<const QualityTable> tables);
// Systems as rows, test conditions as columns, BLEU x 100.
std::string FormatQualityTable(std::span<const QualityTable> tables);

struct SignificanceResult {
  std::string metric = "BLEU";
  double score_a = 0.0;
  double score_b = 0.0;
  double p_value = 1.0;
  size_t iterations = 0;
  uint64_t seed = 0;

  bool significant(double alpha = 0.05) const { return p_value < alpha; }
};

// Paired bootstrap resampling over sentences. p_value is the fraction of
// resamples in which the system with the lower full-set BLEU scores at least
// as high as the other (system A counts as lower on a tie). Throws
// std::invalid_argument on misaligned or empty input, or iterations < 100.
SignificanceResult PairedBootstrap(std::span<const std::string> hyps_a,
                                   std::span<const std::string> hyps_b,
                                   std::span<const std::string> refs,
                                   size_t iterations, uint64_t seed,
                                   const LanguageProfile& profile);

nlohmann::ordered_json SignificanceJson(const SignificanceResult& result);

}  // namespace orthonoise

#endif  // ORTHONOISE_HARNESS_H_
