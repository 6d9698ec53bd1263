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

#include "orthonoise/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace orthonoise {
namespace {

// Maps both sides onto dense word ids so the inner loops compare ints.
void Intern(std::span<const std::string> hyp, std::span<const std::string> ref,
            std::vector<int>& hyp_ids, std::vector<int>& ref_ids) {
  std::unordered_map<std::string_view, int> ids;
  auto id = [&](const std::string& w) {
    auto [it, inserted] = ids.emplace(w, static_cast<int>(ids.size()));
    return it->second;
  };
  hyp_ids.clear();
  ref_ids.clear();
  for (const auto& w : ref) ref_ids.push_back(id(w));
  for (const auto& w : hyp) hyp_ids.push_back(id(w));
}

int Levenshtein(std::span<const int> hyp, std::span<const int> ref,
                std::vector<int>& row) {
  const size_t m = ref.size();
  row.resize(m + 1);
  std::iota(row.begin(), row.end(), 0);
  for (size_t i = 1; i <= hyp.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (size_t j = 1; j <= m; ++j) {
      const int up = row[j];
      const int sub = diag + (hyp[i - 1] == ref[j - 1] ? 0 : 1);
      row[j] = std::min({sub, up + 1, row[j - 1] + 1});
      diag = up;
    }
  }
  return row[m];
}

// Marks hyp and ref positions that are not exact matches on one minimal
// alignment path.
void AlignmentErrors(std::span<const int> hyp, std::span<const int> ref,
                     std::vector<char>& herr, std::vector<char>& rerr) {
  const size_t n = hyp.size();
  const size_t m = ref.size();
  std::vector<int> dp((n + 1) * (m + 1));
  auto at = [&](size_t i, size_t j) -> int& { return dp[i * (m + 1) + j]; };
  for (size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<int>(i);
  for (size_t j = 0; j <= m; ++j) at(0, j) = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      at(i, j) = std::min({at(i - 1, j - 1) + (hyp[i - 1] == ref[j - 1] ? 0 : 1),
                           at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }
  herr.assign(n, 1);
  rerr.assign(m, 1);
  size_t i = n;
  size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && hyp[i - 1] == ref[j - 1] &&
        at(i, j) == at(i - 1, j - 1)) {
      herr[i - 1] = 0;
      rerr[j - 1] = 0;
      --i;
      --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      --i;
    } else {
      --j;
    }
  }
}

void MoveSpan(std::span<const int> seq, size_t start, size_t len, size_t dest,
              std::vector<int>& out) {
  out.clear();
  out.reserve(seq.size());
  // `dest` indexes the sequence with the span removed.
  size_t rest_index = 0;
  for (size_t k = 0; k <= seq.size(); ++k) {
    if (k >= start && k < start + len) continue;
    if (rest_index == dest) {
      out.insert(out.end(), seq.begin() + static_cast<ptrdiff_t>(start),
                 seq.begin() + static_cast<ptrdiff_t>(start + len));
    }
    if (k == seq.size()) break;
    out.push_back(seq[k]);
    ++rest_index;
  }
}

std::string NgramKey(std::span<const std::string> words, size_t start,
                     size_t n) {
  std::string key;
  for (size_t k = 0; k < n; ++k) {
    if (k) key.push_back('\x1f');
    key += words[start + k];
  }
  return key;
}

}  // namespace

int WordEditDistance(std::span<const std::string> hyp,
                     std::span<const std::string> ref) {
  std::vector<int> h;
  std::vector<int> r;
  std::vector<int> row;
  Intern(hyp, ref, h, r);
  return Levenshtein(h, r, row);
}

TerScore Ter(std::span<const std::string> hyp,
             std::span<const std::string> ref, const TerOptions& options) {
  if (ref.empty()) throw MetricError("TER is undefined for an empty reference");
  std::vector<int> cur;
  std::vector<int> ref_ids;
  Intern(hyp, ref, cur, ref_ids);

  std::vector<int> row;
  std::vector<int> moved;
  std::vector<char> herr;
  std::vector<char> rerr;
  int shifts = 0;
  int distance = Levenshtein(cur, ref_ids, row);

  while (distance > 1) {
    AlignmentErrors(cur, ref_ids, herr, rerr);
    const size_t n = cur.size();
    const size_t m = ref_ids.size();
    // (gain, span length, -origin, -destination); larger is better.
    std::tuple<int, size_t, ptrdiff_t, ptrdiff_t> best{0, 0, 0, 0};
    bool found = false;
    std::vector<int> best_seq;
    int best_distance = distance;

    for (size_t start = 0; start < n; ++start) {
      const size_t max_len = std::min<size_t>(
          static_cast<size_t>(std::max(1, options.max_shift_span)), n - start);
      for (size_t len = 1; len <= max_len; ++len) {
        bool hyp_error = false;
        for (size_t k = start; k < start + len; ++k) hyp_error |= herr[k] != 0;
        bool matches_misaligned_ref = false;
        bool matches_any_ref = false;
        for (size_t r = 0; r + len <= m; ++r) {
          if (!std::equal(cur.begin() + static_cast<ptrdiff_t>(start),
                          cur.begin() + static_cast<ptrdiff_t>(start + len),
                          ref_ids.begin() + static_cast<ptrdiff_t>(r))) {
            continue;
          }
          matches_any_ref = true;
          for (size_t k = r; k < r + len; ++k) {
            matches_misaligned_ref |= rerr[k] != 0;
          }
          if (matches_misaligned_ref) break;
        }
        // Longer spans extend this one, so no match means none will match.
        if (!matches_any_ref) break;
        if (!hyp_error || !matches_misaligned_ref) continue;

        for (size_t dest = 0; dest + len <= n; ++dest) {
          if (dest == start) continue;
          MoveSpan(cur, start, len, dest, moved);
          const int d = Levenshtein(moved, ref_ids, row);
          const int gain = distance - d - 1;
          if (gain <= 0) continue;
          const std::tuple<int, size_t, ptrdiff_t, ptrdiff_t> key{
              gain, len, -static_cast<ptrdiff_t>(start),
              -static_cast<ptrdiff_t>(dest)};
          if (!found || key > best) {
            found = true;
            best = key;
            best_seq = moved;
            best_distance = d;
          }
        }
      }
    }
    if (!found) break;
    cur = std::move(best_seq);
    distance = best_distance;
    ++shifts;
  }

  TerScore out;
  out.shifts = shifts;
  out.edits = shifts + distance;
  out.ref_length = static_cast<int>(ref.size());
  out.score = static_cast<double>(out.edits) / out.ref_length;
  return out;
}

std::string FormatTerLine(const TerScore& score) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "TER %d %d %d %.6f", score.edits,
                score.shifts, score.ref_length, score.score);
  return buf;
}

TenfoldTer SentenceTenfoldTer(std::string_view original_translation,
                              std::span<const std::string> noised_translations,
                              const LanguageProfile& profile) {
  const Words ref = TokenSurfaces(original_translation, profile);
  if (ref.empty()) {
    throw MetricError("10NT-TER needs a non-empty original translation");
  }
  if (noised_translations.empty()) {
    throw MetricError("10NT-TER needs at least one noised translation");
  }
  double sum = 0.0;
  for (const std::string& t : noised_translations) {
    sum += Ter(TokenSurfaces(t, profile), ref).score;
  }
  TenfoldTer out;
  out.variants = noised_translations.size();
  out.score = sum / static_cast<double>(out.variants);
  out.shortfall = out.variants < 10 ? 10 - out.variants : 0;
  return out;
}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  for (int n = 0; n < kBleuOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  hyp_length += other.hyp_length;
  ref_length += other.ref_length;
  return *this;
}

BleuStats SentenceBleuStats(std::span<const std::string> hyp,
                            std::span<const std::string> ref) {
  BleuStats stats;
  stats.hyp_length = hyp.size();
  stats.ref_length = ref.size();
  for (size_t n = 1; n <= kBleuOrder; ++n) {
    if (hyp.size() < n) break;
    std::unordered_map<std::string, int> ref_counts;
    for (size_t i = 0; i + n <= ref.size(); ++i) {
      ++ref_counts[NgramKey(ref, i, n)];
    }
    std::unordered_map<std::string, int> hyp_counts;
    for (size_t i = 0; i + n <= hyp.size(); ++i) {
      ++hyp_counts[NgramKey(hyp, i, n)];
    }
    uint64_t matched = 0;
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched += std::min(count, it->second);
    }
    stats.matches[n - 1] = matched;
    stats.totals[n - 1] = hyp.size() - n + 1;
  }
  return stats;
}

BleuScore BleuFromStats(const BleuStats& stats) {
  BleuScore out;
  out.hyp_length = stats.hyp_length;
  out.ref_length = stats.ref_length;
  bool any_zero = false;
  double log_sum = 0.0;
  for (int n = 0; n < kBleuOrder; ++n) {
    const double p = stats.totals[n] == 0
                         ? 0.0
                         : static_cast<double>(stats.matches[n]) /
                               static_cast<double>(stats.totals[n]);
    out.precisions[n] = p;
    if (p == 0.0) {
      any_zero = true;
    } else {
      log_sum += std::log(p);
    }
  }
  if (stats.hyp_length == 0) {
    out.brevity_penalty = 0.0;  // undefined; no output at all
  } else if (stats.hyp_length < stats.ref_length) {
    out.brevity_penalty =
        std::exp(1.0 - static_cast<double>(stats.ref_length) /
                           static_cast<double>(stats.hyp_length));
  } else {
    out.brevity_penalty = 1.0;
  }
  out.score = any_zero ? 0.0
                       : out.brevity_penalty * std::exp(log_sum / kBleuOrder);
  return out;
}

BleuScore CorpusBleu(std::span<const std::string> hyps,
                     std::span<const std::string> refs,
                     const LanguageProfile& profile) {
  if (hyps.size() != refs.size()) {
    throw MetricError("BLEU: " + std::to_string(hyps.size()) +
                      " hypotheses vs " + std::to_string(refs.size()) +
                      " references");
  }
  if (hyps.empty()) throw MetricError("BLEU: empty corpus");
  BleuStats total;
  for (size_t i = 0; i < hyps.size(); ++i) {
    total += SentenceBleuStats(TokenSurfaces(hyps[i], profile),
                               TokenSurfaces(refs[i], profile));
  }
  return BleuFromStats(total);
}

}  // namespace orthonoise
