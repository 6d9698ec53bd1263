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

#ifndef ORTHONOISE_METRICS_H_
#define ORTHONOISE_METRICS_H_

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orthonoise/text_model.h"

namespace orthonoise {

class MetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Words = std::vector<std::string>;

// Word-level Levenshtein distance, unit costs, exact (case-sensitive) match.
int WordEditDistance(std::span<const std::string> hyp,
                     std::span<const std::string> ref);

struct TerScore {
  int edits = 0;   // insertions + deletions + substitutions + shifts
  int shifts = 0;
  int ref_length = 0;
  double score = 0.0;  // edits / ref_length; may exceed 1
};

struct TerOptions {
  int max_shift_span = 10;
};

// Translation edit rate with greedy block-shift search. Each round takes the
// shift that lowers the edit distance by at least two (a shift costs one);
// ties go to the longest span, then the leftmost origin, then the leftmost
// destination. Throws MetricError for an empty reference.
TerScore Ter(std::span<const std::string> hyp,
             std::span<const std::string> ref, const TerOptions& options = {});

// Machine-readable "TER <edits> <shifts> <ref_len> <score>".
std::string FormatTerLine(const TerScore& score);

struct TenfoldTer {
  double score = 0.0;     // mean TER over the scored variants
  size_t variants = 0;    // translations scored
  size_t shortfall = 0;   // 10 - variants when fewer were produced
};

// Mean TER of each noised translation against the original translation.
// Throws MetricError if the original tokenizes to nothing or the list is
// empty.
TenfoldTer SentenceTenfoldTer(std::string_view original_translation,
                              std::span<const std::string> noised_translations,
                              const LanguageProfile& profile);

inline constexpr int kBleuOrder = 4;

// Sufficient statistics of corpus BLEU; merging is element-wise addition.
struct BleuStats {
  std::array<uint64_t, kBleuOrder> matches{};
  std::array<uint64_t, kBleuOrder> totals{};
  uint64_t hyp_length = 0;
  uint64_t ref_length = 0;

  BleuStats& operator+=(const BleuStats& other);
};

struct BleuScore {
  double score = 0.0;
  std::array<double, kBleuOrder> precisions{};
  double brevity_penalty = 1.0;
  uint64_t hyp_length = 0;
  uint64_t ref_length = 0;
};

BleuStats SentenceBleuStats(std::span<const std::string> hyp,
                            std::span<const std::string> ref);
BleuScore BleuFromStats(const BleuStats& stats);

// Tokenized, case-sensitive corpus BLEU (orders 1-4, no smoothing).
// Throws MetricError when the lists differ in length or are empty.
BleuScore CorpusBleu(std::span<const std::string> hyps,
                     std::span<const std::string> refs,
                     const LanguageProfile& profile);

}  // namespace orthonoise

#endif  // ORTHONOISE_METRICS_H_
