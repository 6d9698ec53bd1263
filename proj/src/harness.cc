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

#include "orthonoise/harness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "orthonoise/parallel.h"
#include "orthonoise/rng.h"

namespace orthonoise {
namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string PadRight(const std::string& s, size_t width) {
  // Width in code points so diacritics in system names do not skew columns.
  size_t cps = 0;
  for (char c : s) cps += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  return cps >= width ? s : s + std::string(width - cps, ' ');
}

std::string PadLeft(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::vector<std::string> TranslateAll(Translator& translator,
                                      std::span<const std::string> inputs,
                                      size_t batch_size) {
  if (batch_size == 0) batch_size = inputs.size() == 0 ? 1 : inputs.size();
  std::vector<std::string> out;
  out.reserve(inputs.size());
  for (size_t start = 0, batch = 0; start < inputs.size();
       start += batch_size, ++batch) {
    const size_t len = std::min(batch_size, inputs.size() - start);
    std::vector<std::string> part;
    const std::string where = "batch " + std::to_string(batch) +
                              " (sentence " + std::to_string(start) + ")";
    try {
      part = translator.Translate(inputs.subspan(start, len));
    } catch (const std::exception& e) {
      throw TranslatorError(where + ": " + e.what());
    }
    if (part.size() != len) {
      throw TranslatorError(where + ": translator returned " +
                            std::to_string(part.size()) + " lines for " +
                            std::to_string(len) + " inputs");
    }
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

uint64_t VariantSeed(uint64_t seed, size_t sentence, NoiseType type,
                     size_t variant) {
  return DeriveSeed(seed, {static_cast<uint64_t>(sentence),
                           static_cast<uint64_t>(NoiseCode(type)),
                           static_cast<uint64_t>(variant)});
}

RobustnessReport EvaluateRobustness(Translator& translator,
                                    std::span<const std::string> test_sentences,
                                    std::span<const NoiseType> noise_types,
                                    const LanguageProfile& profile,
                                    const Lexicon& lexicon, uint64_t seed,
                                    const EvalOptions& options) {
  if (test_sentences.empty()) {
    throw std::invalid_argument("robustness evaluation needs test sentences");
  }
  if (options.variants_per_sentence < 1) {
    throw std::invalid_argument("variants per sentence must be >= 1");
  }
  const size_t n = test_sentences.size();
  const size_t variants = options.variants_per_sentence;
  NoiseOptions noise_options;
  noise_options.edits_per_sentence = options.edits_per_sentence;

  RobustnessReport report;
  report.profile = profile.language_tag;
  report.seed = seed;
  report.translator_id = translator.id();
  report.variants_per_sentence = variants;

  std::vector<Sentence> sentences(n);
  ParallelFor(n, options.jobs,
              [&](size_t i) { sentences[i] = Tokenize(test_sentences[i], profile); });

  const std::vector<std::string> originals =
      TranslateAll(translator, test_sentences, options.batch_size);
  std::vector<std::vector<std::string>> reference_tokens(n);
  ParallelFor(n, options.jobs, [&](size_t i) {
    reference_tokens[i] = TokenSurfaces(originals[i], profile);
  });
  for (size_t i = 0; i < n; ++i) {
    if (reference_tokens[i].empty()) ++report.skipped_sentences;
  }

  for (NoiseType type : noise_types) {
    // Slot i * variants + j holds the noised text or nothing on a no-op.
    std::vector<std::optional<std::string>> noised(n * variants);
    ParallelFor(n, options.jobs, [&](size_t i) {
      for (size_t j = 0; j < variants; ++j) {
        NoisedSentence ns = ApplyNoise(sentences[i], type, profile, lexicon,
                                       VariantSeed(seed, i, type, j),
                                       noise_options);
        if (!ns.noop()) noised[i * variants + j] = std::move(ns.noised_text);
      }
    });

    std::vector<std::string> to_translate;
    std::vector<size_t> slot_of;
    TypeRobustness row{type};
    for (size_t k = 0; k < noised.size(); ++k) {
      if (!noised[k]) {
        ++row.noops;
      } else if (!reference_tokens[k / variants].empty()) {
        slot_of.push_back(k);
        to_translate.push_back(*noised[k]);
      }
    }
    const std::vector<std::string> translated =
        TranslateAll(translator, to_translate, options.batch_size);

    // Per-sentence TER sums, filled in parallel and reduced in order.
    std::vector<double> sums(n, 0.0);
    std::vector<size_t> counts(n, 0);
    std::vector<double> scores(translated.size());
    ParallelFor(translated.size(), options.jobs, [&](size_t t) {
      const size_t i = slot_of[t] / variants;
      scores[t] = Ter(TokenSurfaces(translated[t], profile), reference_tokens[i]).score;
    });
    for (size_t t = 0; t < translated.size(); ++t) {
      const size_t i = slot_of[t] / variants;
      sums[i] += scores[t];
      ++counts[i];
    }
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
      if (counts[i] == 0) continue;
      total += sums[i] / static_cast<double>(counts[i]);
      ++row.sentences;
    }
    row.mean_10nt_ter = row.sentences == 0 ? 0.0 : total / row.sentences;
    report.per_type.push_back(row);
  }

  double sum = 0.0;
  for (const auto& row : report.per_type) sum += row.mean_10nt_ter;
  report.overall =
      report.per_type.empty() ? 0.0 : sum / static_cast<double>(report.per_type.size());
  return report;
}

nlohmann::ordered_json RobustnessReportJson(const RobustnessReport& report) {
  nlohmann::ordered_json metadata = {
      {"profile", report.profile},
      {"seed", report.seed},
      {"translator", report.translator_id},
      {"variants_per_sentence", report.variants_per_sentence},
      {"aggregation", "macro average over sentences and over noise types"},
      {"skipped_sentences", report.skipped_sentences},
  };
  if (report.timestamp) metadata["timestamp"] = *report.timestamp;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.per_type) {
    rows.push_back({{"noise_type", NoiseTypeName(row.noise_type)},
                    {"mean_10nt_ter", row.mean_10nt_ter},
                    {"sentences", row.sentences},
                    {"noops", row.noops}});
  }
  return {{"metadata", metadata},
          {"noise_types", rows},
          {"overall_10nt_ter", report.overall}};
}

std::string FormatRobustnessTable(std::span<const RobustnessReport> reports) {
  if (reports.empty()) return "";
  size_t name_width = 6;
  for (const auto& r : reports) {
    name_width = std::max(name_width, r.translator_id.size());
  }
  const auto& columns = reports.front().per_type;
  std::string out = PadRight("System", name_width);
  std::vector<size_t> widths;
  for (const auto& col : columns) {
    const std::string name(NoiseTypeName(col.noise_type));
    widths.push_back(std::max<size_t>(name.size(), 6));
    out += "  " + PadLeft(name, widths.back());
  }
  out += "  " + PadLeft("avg", 6) + "\n";
  for (const auto& r : reports) {
    out += PadRight(r.translator_id, name_width);
    for (size_t c = 0; c < r.per_type.size() && c < widths.size(); ++c) {
      out += "  " + PadLeft(Fixed(r.per_type[c].mean_10nt_ter, 4), widths[c]);
    }
    out += "  " + PadLeft(Fixed(r.overall, 4), 6) + "\n";
  }
  return out;
}

QualityTable EvaluateQuality(Translator& translator,
                             const ParallelCorpus& test_corpus,
                             std::span<const NoiseType> noise_types,
                             const LanguageProfile& profile,
                             const Lexicon& lexicon, uint64_t seed,
                             const EvalOptions& options) {
  test_corpus.Validate();
  if (test_corpus.size() == 0) {
    throw std::invalid_argument("quality evaluation needs a non-empty corpus");
  }
  const size_t n = test_corpus.size();
  NoiseOptions noise_options;
  noise_options.edits_per_sentence = options.edits_per_sentence;

  QualityTable table;
  table.system = translator.id();
  auto score = [&](std::span<const std::string> sources) {
    const auto hyps = TranslateAll(translator, sources, options.batch_size);
    return CorpusBleu(hyps, test_corpus.target, profile);
  };
  table.conditions.push_back({"clean", score(test_corpus.source), 0});

  std::vector<Sentence> sentences(n);
  ParallelFor(n, options.jobs, [&](size_t i) {
    sentences[i] = Tokenize(test_corpus.source[i], profile);
  });
  for (NoiseType type : noise_types) {
    std::vector<std::string> noised(n);
    std::vector<char> noop(n, 0);
    ParallelFor(n, options.jobs, [&](size_t i) {
      NoisedSentence ns = ApplyNoise(sentences[i], type, profile, lexicon,
                                     VariantSeed(seed, i, type, 0),
                                     noise_options);
      noop[i] = ns.noop();
      noised[i] = ns.noop() ? test_corpus.source[i] : std::move(ns.noised_text);
    });
    QualityCondition cond{std::string(NoiseTypeName(type)), score(noised), 0};
    cond.noops = static_cast<size_t>(std::count(noop.begin(), noop.end(), 1));
    table.conditions.push_back(std::move(cond));
  }
  return table;
}

nlohmann::ordered_json QualityTablesJson(std::span<const QualityTable> tables) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    nlohmann::ordered_json conds = nlohmann::ordered_json::array();
    for (const auto& c : t.conditions) {
      conds.push_back({{"condition", c.condition},
                       {"bleu", c.bleu.score},
                       {"precisions", c.bleu.precisions},
                       {"brevity_penalty", c.bleu.brevity_penalty},
                       {"hyp_length", c.bleu.hyp_length},
                       {"ref_length", c.bleu.ref_length},
                       {"noops", c.noops}});
    }
    out.push_back({{"system", t.system}, {"conditions", conds}});
  }
  return out;
}

std::string FormatQualityTable(std::span<const QualityTable> tables) {
  if (tables.empty()) return "";
  size_t name_width = 6;
  for (const auto& t : tables) name_width = std::max(name_width, t.system.size());
  std::string out = PadRight("System", name_width);
  std::vector<size_t> widths;
  for (const auto& c : tables.front().conditions) {
    widths.push_back(std::max<size_t>(c.condition.size(), 6));
    out += "  " + PadLeft(c.condition, widths.back());
  }
  out += "\n";
  for (const auto& t : tables) {
    out += PadRight(t.system, name_width);
    for (size_t c = 0; c < t.conditions.size() && c < widths.size(); ++c) {
      out += "  " + PadLeft(Fixed(100.0 * t.conditions[c].bleu.score, 2), widths[c]);
    }
    out += "\n";
  }
  return out;
}

SignificanceResult PairedBootstrap(std::span<const std::string> hyps_a,
                                   std::span<const std::string> hyps_b,
                                   std::span<const std::string> refs,
                                   size_t iterations, uint64_t seed,
                                   const LanguageProfile& profile) {
  if (hyps_a.size() != refs.size() || hyps_b.size() != refs.size()) {
    throw std::invalid_argument(
        "bootstrap inputs are misaligned: " + std::to_string(hyps_a.size()) +
        " / " + std::to_string(hyps_b.size()) + " / " +
        std::to_string(refs.size()) + " lines");
  }
  if (refs.empty()) throw std::invalid_argument("bootstrap needs a non-empty test set");
  if (iterations < 100) {
    throw std::invalid_argument("bootstrap needs at least 100 iterations");
  }
  const size_t n = refs.size();
  std::vector<BleuStats> stats_a(n);
  std::vector<BleuStats> stats_b(n);
  BleuStats total_a;
  BleuStats total_b;
  for (size_t i = 0; i < n; ++i) {
    const Words ref = TokenSurfaces(refs[i], profile);
    stats_a[i] = SentenceBleuStats(TokenSurfaces(hyps_a[i], profile), ref);
    stats_b[i] = SentenceBleuStats(TokenSurfaces(hyps_b[i], profile), ref);
    total_a += stats_a[i];
    total_b += stats_b[i];
  }

  SignificanceResult result;
  result.score_a = BleuFromStats(total_a).score;
  result.score_b = BleuFromStats(total_b).score;
  result.iterations = iterations;
  result.seed = seed;
  const bool a_is_lower = result.score_a <= result.score_b;

  SplitMix64 rng(seed);
  size_t lower_wins = 0;
  for (size_t it = 0; it < iterations; ++it) {
    BleuStats sample_a;
    BleuStats sample_b;
    for (size_t k = 0; k < n; ++k) {
      const size_t pick = rng.Uniform(n);
      sample_a += stats_a[pick];
      sample_b += stats_b[pick];
    }
    const double a = BleuFromStats(sample_a).score;
    const double b = BleuFromStats(sample_b).score;
    if (a_is_lower ? a >= b : b >= a) ++lower_wins;
  }
  result.p_value = static_cast<double>(lower_wins) / static_cast<double>(iterations);
  return result;
}

nlohmann::ordered_json SignificanceJson(const SignificanceResult& result) {
  return {{"metric", result.metric},
          {"score_a", result.score_a},
          {"score_b", result.score_b},
          {"p_value", result.p_value},
          {"iterations", result.iterations},
          {"seed", result.seed},
          {"significant_at_0.05", result.significant()}};
}

}  // namespace orthonoise
