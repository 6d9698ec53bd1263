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

// Slow reference implementations used only by tests. None of these share
// code with the library.

#ifndef ORTHONOISE_TESTS_ORACLES_H_
#define ORTHONOISE_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace orthonoise::testing {

// Levenshtein by memoised recursion over suffixes (textbook definition).
template <typename T>
int RecursiveEditDistance(const std::vector<T>& a, const std::vector<T>& b) {
  std::map<std::pair<size_t, size_t>, int> memo;
  std::function<int(size_t, size_t)> go = [&](size_t i, size_t j) -> int {
    if (i == a.size()) return static_cast<int>(b.size() - j);
    if (j == b.size()) return static_cast<int>(a.size() - i);
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    best = std::min(best, go(i + 1, j) + 1);
    best = std::min(best, go(i, j + 1) + 1);
    return memo[key] = best;
  };
  return go(0, 0);
}

// True when one insertion, deletion, substitution or adjacent transposition
// turns a into b, checked by generating every such edit of a.
inline bool BruteDamerauOne(const std::u32string& a, const std::u32string& b,
                            const std::u32string& alphabet) {
  if (a == b) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    std::u32string del = a;
    del.erase(i, 1);
    if (del == b) return true;
    if (i + 1 < a.size() && a[i] != a[i + 1]) {
      std::u32string swapped = a;
      std::swap(swapped[i], swapped[i + 1]);
      if (swapped == b) return true;
    }
  }
  for (char32_t c : alphabet) {
    for (size_t i = 0; i <= a.size(); ++i) {
      std::u32string ins = a;
      ins.insert(ins.begin() + i, c);
      if (ins == b) return true;
      if (i < a.size() && a[i] != c) {
        std::u32string sub = a;
        sub[i] = c;
        if (sub == b) return true;
      }
    }
  }
  return false;
}

// Moves hyp[start, start+len) so that it begins at `dest` in the sequence
// with the span removed.
inline std::vector<int> ShiftSpan(const std::vector<int>& hyp, size_t start,
                                  size_t len, size_t dest) {
  std::vector<int> rest(hyp.begin(), hyp.begin() + start);
  rest.insert(rest.end(), hyp.begin() + start + len, hyp.end());
  std::vector<int> out(rest.begin(), rest.begin() + dest);
  out.insert(out.end(), hyp.begin() + start, hyp.begin() + start + len);
  out.insert(out.end(), rest.begin() + dest, rest.end());
  return out;
}

// Minimum of (number of block shifts + edit distance) over every sequence
// of arbitrary block shifts, by breadth-first search over reachable word
// orders. Returns the optimal edit count.
inline int ExhaustiveTerEdits(const std::vector<int>& hyp,
                              const std::vector<int>& ref) {
  int best = RecursiveEditDistance(hyp, ref);
  std::set<std::vector<int>> seen{hyp};
  std::deque<std::pair<std::vector<int>, int>> queue{{hyp, 0}};
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth + 1 >= best) continue;
    const size_t n = cur.size();
    for (size_t start = 0; start < n; ++start) {
      for (size_t len = 1; start + len <= n; ++len) {
        for (size_t dest = 0; dest <= n - len; ++dest) {
          if (dest == start) continue;
          std::vector<int> next = ShiftSpan(cur, start, len, dest);
          if (!seen.insert(next).second) continue;
          best = std::min(best, depth + 1 + RecursiveEditDistance(next, ref));
          queue.emplace_back(std::move(next), depth + 1);
        }
      }
    }
  }
  return best;
}

// Clipped n-gram BLEU written directly from the definition, over token
// lists. Used to hand-check the library on small fixtures.
inline double DefinitionBleu(const std::vector<std::vector<std::string>>& hyps,
                             const std::vector<std::vector<std::string>>& refs) {
  double log_sum = 0.0;
  size_t hyp_len = 0, ref_len = 0;
  for (size_t i = 0; i < hyps.size(); ++i) {
    hyp_len += hyps[i].size();
    ref_len += refs[i].size();
  }
  for (int n = 1; n <= 4; ++n) {
    size_t match = 0, total = 0;
    for (size_t i = 0; i < hyps.size(); ++i) {
      std::map<std::vector<std::string>, int> h, r;
      for (size_t k = 0; k + n <= hyps[i].size(); ++k) {
        ++h[std::vector<std::string>(hyps[i].begin() + k,
                                     hyps[i].begin() + k + n)];
      }
      for (size_t k = 0; k + n <= refs[i].size(); ++k) {
        ++r[std::vector<std::string>(refs[i].begin() + k,
                                     refs[i].begin() + k + n)];
      }
      for (const auto& [gram, c] : h) {
        total += c;
        auto it = r.find(gram);
        if (it != r.end()) match += std::min(c, it->second);
      }
    }
    if (match == 0) return 0.0;
    log_sum += std::log(static_cast<double>(match) / total);
  }
  const double bp =
      hyp_len < ref_len ? std::exp(1.0 - static_cast<double>(ref_len) / hyp_len)
                        : 1.0;
  return bp * std::exp(log_sum / 4);
}

}  // namespace orthonoise::testing

#endif  // ORTHONOISE_TESTS_ORACLES_H_
