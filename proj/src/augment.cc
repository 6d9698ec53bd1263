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

#include "orthonoise/augment.h"

#include <algorithm>

#include "orthonoise/corpus_io.h"
#include "orthonoise/parallel.h"
#include "orthonoise/rng.h"

namespace orthonoise {
namespace {

// Stream tag for the equal-mix shuffle, kept apart from per-line seeds.
constexpr uint64_t kAssignmentStream = 0x6d69782d61737367ULL;

struct LineOutcome {
  std::string text;
  bool noop = false;
};

AugmentResult Run(const ParallelCorpus& corpus,
                  std::span<const NoiseType> per_line,
                  std::span<const NoiseType> plan_types,
                  const LanguageProfile& profile, const Lexicon& lexicon,
                  uint64_t seed, int edits_per_sentence, int jobs) {
  corpus.Validate();
  if (corpus.size() == 0) {
    throw std::invalid_argument("cannot augment an empty corpus");
  }
  const size_t n = corpus.size();
  std::vector<LineOutcome> outcomes(n);
  NoiseOptions options;
  options.edits_per_sentence = edits_per_sentence;

  ParallelFor(n, jobs, [&](size_t i) {
    const Sentence sentence = Tokenize(corpus.source[i], profile);
    const NoisedSentence noised =
        ApplyNoise(sentence, per_line[i], profile, lexicon,
                   LineSeed(seed, i, per_line[i]), options);
    if (noised.noop()) {
      outcomes[i] = {corpus.source[i], true};
    } else {
      outcomes[i] = {noised.noised_text, false};
    }
  });

  AugmentResult result;
  result.corpus.source = corpus.source;
  result.corpus.target = corpus.target;
  result.corpus.source.reserve(2 * n);
  result.corpus.target.reserve(2 * n);
  for (NoiseType t : plan_types) result.tallies.push_back({t, 0, 0});
  for (size_t i = 0; i < n; ++i) {
    result.corpus.source.push_back(std::move(outcomes[i].text));
    result.corpus.target.push_back(corpus.target[i]);
    auto tally = std::find_if(result.tallies.begin(), result.tallies.end(),
                              [&](const TypeTally& t) { return t.type == per_line[i]; });
    ++tally->assigned;
    if (outcomes[i].noop) {
      ++tally->noops;
      ++result.noops;
    }
  }
  return result;
}

std::string ModeName(AugmentMode mode) {
  return mode == AugmentMode::kOneToOne ? "one-to-one" : "equal-mix";
}

}  // namespace

void ParallelCorpus::Validate() const {
  if (source.size() != target.size()) {
    throw std::invalid_argument(
        "misaligned corpus: " + std::to_string(source.size()) +
        " source lines vs " + std::to_string(target.size()) + " target lines");
  }
  auto check = [](const std::vector<std::string>& side, const char* name) {
    for (size_t i = 0; i < side.size(); ++i) {
      if (side[i].find('\n') != std::string::npos) {
        throw std::invalid_argument(std::string(name) + " line " +
                                    std::to_string(i + 1) +
                                    " contains a newline");
      }
    }
  };
  check(source, "source");
  check(target, "target");
}

ParallelCorpus ParseTsv(std::span<const std::string> lines) {
  ParallelCorpus corpus;
  for (size_t i = 0; i < lines.size(); ++i) {
    const size_t tab = lines[i].find('\t');
    if (tab == std::string::npos) {
      throw LineError(i + 1, "line " + std::to_string(i + 1) +
                                 ": expected source<TAB>target");
    }
    corpus.source.push_back(lines[i].substr(0, tab));
    corpus.target.push_back(lines[i].substr(tab + 1));
  }
  return corpus;
}

std::vector<std::string> ToTsv(const ParallelCorpus& corpus) {
  std::vector<std::string> out;
  out.reserve(corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) {
    out.push_back(corpus.source[i] + "\t" + corpus.target[i]);
  }
  return out;
}

void AugmentPlan::Validate() const {
  if (mode == AugmentMode::kOneToOne && noise_types.size() != 1) {
    throw std::invalid_argument("one-to-one augmentation takes exactly one noise type");
  }
  if (mode == AugmentMode::kEqualMix && noise_types.size() < 2) {
    throw std::invalid_argument("equal-mix augmentation needs at least two noise types");
  }
  for (size_t i = 0; i < noise_types.size(); ++i) {
    for (size_t j = i + 1; j < noise_types.size(); ++j) {
      if (noise_types[i] == noise_types[j]) {
        throw std::invalid_argument("duplicate noise type '" +
                                    std::string(NoiseTypeName(noise_types[i])) + "'");
      }
    }
  }
  if (edits_per_sentence < 1) {
    throw std::invalid_argument("edits per sentence must be >= 1");
  }
}

double AugmentResult::noop_rate() const {
  const size_t noised = corpus.size() / 2;
  return noised == 0 ? 0.0
                     : static_cast<double>(noops) / static_cast<double>(noised);
}

std::vector<NoiseType> ProductiveNoiseTypes() {
  return {NoiseType::kPermuteLetters,    NoiseType::kConfuseLetters,
          NoiseType::kAddDiacritic,      NoiseType::kSampleSubstitute,
          NoiseType::kRemovePunctuation, NoiseType::kLatinize,
          NoiseType::kPhoneticLatinize};
}

uint64_t LineSeed(uint64_t seed, size_t line_index, NoiseType type) {
  return DeriveSeed(seed, {static_cast<uint64_t>(line_index),
                           static_cast<uint64_t>(NoiseCode(type))});
}

std::vector<NoiseType> BalancedAssignment(size_t lines,
                                          std::span<const NoiseType> types,
                                          uint64_t seed) {
  if (types.empty()) throw std::invalid_argument("no noise types to assign");
  std::vector<NoiseType> assignment(lines);
  for (size_t i = 0; i < lines; ++i) assignment[i] = types[i % types.size()];
  SplitMix64 rng(DeriveSeed(seed, {kAssignmentStream}));
  for (size_t i = lines; i > 1; --i) {
    const size_t j = rng.Uniform(i);
    std::swap(assignment[i - 1], assignment[j]);
  }
  return assignment;
}

AugmentResult UpsampleOneToOne(const ParallelCorpus& corpus, NoiseType type,
                               const LanguageProfile& profile,
                               const Lexicon& lexicon, uint64_t seed,
                               int edits_per_sentence, int jobs) {
  const std::vector<NoiseType> per_line(corpus.size(), type);
  const NoiseType plan[] = {type};
  return Run(corpus, per_line, plan, profile, lexicon, seed,
             edits_per_sentence, jobs);
}

AugmentResult MixEqualProportion(const ParallelCorpus& corpus,
                                 std::span<const NoiseType> types,
                                 const LanguageProfile& profile,
                                 const Lexicon& lexicon, uint64_t seed,
                                 int edits_per_sentence, int jobs) {
  if (types.size() < 2) {
    throw std::invalid_argument("equal-mix augmentation needs at least two noise types");
  }
  const std::vector<NoiseType> per_line =
      BalancedAssignment(corpus.size(), types, seed);
  return Run(corpus, per_line, types, profile, lexicon, seed,
             edits_per_sentence, jobs);
}

AugmentResult Augment(const ParallelCorpus& corpus, const AugmentPlan& plan,
                      const LanguageProfile& profile, const Lexicon& lexicon,
                      int jobs) {
  plan.Validate();
  if (plan.mode == AugmentMode::kOneToOne) {
    return UpsampleOneToOne(corpus, plan.noise_types.front(), profile, lexicon,
                            plan.seed, plan.edits_per_sentence, jobs);
  }
  return MixEqualProportion(corpus, plan.noise_types, profile, lexicon,
                            plan.seed, plan.edits_per_sentence, jobs);
}

nlohmann::ordered_json AugmentManifest(const AugmentPlan& plan,
                                       const AugmentResult& result,
                                       size_t input_pairs) {
  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  for (NoiseType t : plan.noise_types) types.push_back(NoiseTypeName(t));
  nlohmann::ordered_json counts = nlohmann::ordered_json::array();
  for (const TypeTally& t : result.tallies) {
    counts.push_back({{"noise_type", NoiseTypeName(t.type)},
                      {"lines", t.assigned},
                      {"noops", t.noops}});
  }
  return {
      {"plan",
       {{"mode", ModeName(plan.mode)},
        {"noise_types", types},
        {"seed", plan.seed},
        {"edits_per_sentence", plan.edits_per_sentence},
        {"profile", plan.profile_tag}}},
      {"input_pairs", input_pairs},
      {"output_pairs", result.corpus.size()},
      {"per_type", counts},
      {"noop_count", result.noops},
      {"noop_rate", result.noop_rate()},
  };
}

}  // namespace orthonoise
