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

// The generative noise model. Ten edit kernels, each deterministic given its
// arguments, and ApplyNoise, which picks edit sites with a seeded RNG.
//
// Word kernels take and return UTF-8 strings; positions count code points.

#ifndef ORTHONOISE_NOISE_H_
#define ORTHONOISE_NOISE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orthonoise/text_model.h"

namespace orthonoise {

// Codes 1-10 are stable and used in seed derivation.
enum class NoiseType : int {
  kIntroduceExtraLetters = 1,
  kDeleteLetters = 2,
  kPermuteLetters = 3,
  kConfuseLetters = 4,
  kAddDiacritic = 5,
  kSampleSubstitute = 6,
  kRemovePunctuation = 7,
  kAddComma = 8,
  kLatinize = 9,
  kPhoneticLatinize = 10,
};

inline constexpr std::array<NoiseType, 10> kAllNoiseTypes = {
    NoiseType::kIntroduceExtraLetters, NoiseType::kDeleteLetters,
    NoiseType::kPermuteLetters,        NoiseType::kConfuseLetters,
    NoiseType::kAddDiacritic,          NoiseType::kSampleSubstitute,
    NoiseType::kRemovePunctuation,     NoiseType::kAddComma,
    NoiseType::kLatinize,              NoiseType::kPhoneticLatinize,
};

constexpr int NoiseCode(NoiseType type) { return static_cast<int>(type); }

// CLI spelling: extra-letter, delete-letter, permute-letters, ...
std::string_view NoiseTypeName(NoiseType type);
std::optional<NoiseType> ParseNoiseType(std::string_view name);

// Types 7, 9 and 10 rewrite the whole sentence deterministically.
bool IsSentenceLevel(NoiseType type);

class NoiseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// --- Word kernels. All throw NoiseError on precondition violations. ---

std::string InsertLetter(std::string_view word, size_t pos, char32_t letter);
std::string DeleteLetter(std::string_view word, size_t pos);
// Swaps pos and pos+1; the two characters must differ.
std::string PermuteLetters(std::string_view word, size_t pos);
std::string ConfuseLetter(std::string_view word, size_t pos,
                          size_t adjacency_choice,
                          const LanguageProfile& profile);
std::string AddDiacritic(std::string_view word, size_t pos,
                         size_t variant_choice,
                         const LanguageProfile& profile);

// --- Sentence kernels. ---

// `replacement` must be one of Ed1Neighbors(token, lexicon); it is re-cased
// after the original token.
Sentence SampleSubstitute(const Sentence& sentence, size_t token_index,
                          std::string_view replacement,
                          const Lexicon& lexicon);
Sentence RemovePunctuation(const Sentence& sentence);
// Inserts profile.comma right after word token `token_index`.
Sentence AddComma(const Sentence& sentence, size_t token_index,
                  const LanguageProfile& profile);
Sentence Latinize(const Sentence& sentence, const LanguageProfile& profile);
Sentence PhoneticLatinize(const Sentence& sentence,
                          const LanguageProfile& profile);

std::string LatinizeWord(std::string_view word,
                         const LanguageProfile& profile);

// One applied edit. Word edits carry the token index and, for letter edits,
// the code point position inside the token. Sentence-level edits leave both
// empty.
struct EditRecord {
  NoiseType noise_type;
  std::optional<size_t> token_index;
  std::optional<size_t> char_position;
  std::string removed;
  std::string inserted;

  friend bool operator==(const EditRecord&, const EditRecord&) = default;
};

struct NoisedSentence {
  Sentence original;
  Sentence noised;
  std::string noised_text;
  std::vector<EditRecord> edits;
  uint64_t seed = 0;

  bool noop() const { return edits.empty(); }
};

struct NoiseOptions {
  int edits_per_sentence = 1;
  // Weight sample-substitute candidates by lexicon count instead of
  // drawing them uniformly.
  bool frequency_weighted_substitution = false;
};

// Applies one noise type to `sentence`. When no eligible site exists the
// result is the unchanged sentence with no edits.
NoisedSentence ApplyNoise(const Sentence& sentence, NoiseType type,
                          const LanguageProfile& profile,
                          const Lexicon& lexicon, uint64_t seed,
                          const NoiseOptions& options = {});

// Re-applies `edits` to `original`. Throws NoiseError when an edit does not
// fit the sentence it is applied to.
Sentence ReplayEdits(const Sentence& original,
                     const std::vector<EditRecord>& edits,
                     const LanguageProfile& profile);

}  // namespace orthonoise

#endif  // ORTHONOISE_NOISE_H_
