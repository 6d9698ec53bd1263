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

// Training-data augmentation. Both protocols emit the original pairs followed
// by one noised copy of every pair (source noised, target untouched), so the
// output always has twice as many pairs as the input.

#ifndef ORTHONOISE_AUGMENT_H_
#define ORTHONOISE_AUGMENT_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthonoise/noise.h"
#include "orthonoise/text_model.h"

namespace orthonoise {

struct ParallelCorpus {
  std::vector<std::string> source;
  std::vector<std::string> target;

  size_t size() const { return source.size(); }
  // Throws std::invalid_argument on unequal sides or embedded newlines.
  void Validate() const;
};

// Splits "source<TAB>target" lines; throws LineError for lines without a tab.
ParallelCorpus ParseTsv(std::span<const std::string> lines);
std::vector<std::string> ToTsv(const ParallelCorpus& corpus);

enum class AugmentMode { kOneToOne, kEqualMix };

struct AugmentPlan {
  std::vector<NoiseType> noise_types;
  AugmentMode mode = AugmentMode::kEqualMix;
  uint64_t seed = 0;
  int edits_per_sentence = 1;
  std::string profile_tag;

  // one-to-one needs exactly one type, equal-mix at least two.
  void Validate() const;
};

struct TypeTally {
  NoiseType type;
  size_t assigned = 0;
  size_t noops = 0;
};

struct AugmentResult {
  ParallelCorpus corpus;
  std::vector<TypeTally> tallies;  // in plan order
  size_t noops = 0;

  double noop_rate() const;
};

// The seven types kept after dropping the redundant delete-letter,
// extra-letter and add-comma models.
std::vector<NoiseType> ProductiveNoiseTypes();

// Per-line noise seed: DeriveSeed(seed, {line_index, type code}).
uint64_t LineSeed(uint64_t seed, size_t line_index, NoiseType type);

// A balanced type per line (counts differ by at most one), shuffled with a
// seeded Fisher-Yates pass.
std::vector<NoiseType> BalancedAssignment(size_t lines,
                                          std::span<const NoiseType> types,
                                          uint64_t seed);

AugmentResult UpsampleOneToOne(const ParallelCorpus& corpus, NoiseType type,
                               const LanguageProfile& profile,
                               const Lexicon& lexicon, uint64_t seed,
                               int edits_per_sentence = 1, int jobs = 1);

AugmentResult MixEqualProportion(const ParallelCorpus& corpus,
                                 std::span<const NoiseType> types,
                                 const LanguageProfile& profile,
                                 const Lexicon& lexicon, uint64_t seed,
                                 int edits_per_sentence = 1, int jobs = 1);

AugmentResult Augment(const ParallelCorpus& corpus, const AugmentPlan& plan,
                      const LanguageProfile& profile, const Lexicon& lexicon,
                      int jobs = 1);

nlohmann::ordered_json AugmentManifest(const AugmentPlan& plan,
                                       const AugmentResult& result,
                                       size_t input_pairs);

}  // namespace orthonoise

#endif  // ORTHONOISE_AUGMENT_H_
