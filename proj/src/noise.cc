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

#include "orthonoise/noise.h"

#include <algorithm>
#include <numeric>

#include "orthonoise/rng.h"
#include "orthonoise/unicode.h"

namespace orthonoise {
namespace {

struct NoiseName {
  NoiseType type;
  std::string_view name;
};

constexpr NoiseName kNames[] = {
    {NoiseType::kIntroduceExtraLetters, "extra-letter"},
    {NoiseType::kDeleteLetters, "delete-letter"},
    {NoiseType::kPermuteLetters, "permute-letters"},
    {NoiseType::kConfuseLetters, "confuse-letters"},
    {NoiseType::kAddDiacritic, "add-diacritic"},
    {NoiseType::kSampleSubstitute, "sample-substitute"},
    {NoiseType::kRemovePunctuation, "remove-punct"},
    {NoiseType::kAddComma, "add-comma"},
    {NoiseType::kLatinize, "latinize"},
    {NoiseType::kPhoneticLatinize, "phonetic-latinize"},
};

void CheckPosition(size_t pos, size_t limit, std::string_view what) {
  if (pos >= limit) {
    throw NoiseError(std::string(what) + ": position " + std::to_string(pos) +
                     " out of range");
  }
}

const std::u32string* AdjacencyFor(char32_t c, const LanguageProfile& profile) {
  auto it = profile.keyboard_adjacency.find(ToLower(c));
  if (it == profile.keyboard_adjacency.end() || it->second.empty()) {
    return nullptr;
  }
  return &it->second;
}

const std::u32string* VariantsFor(char32_t c, const LanguageProfile& profile) {
  auto it = profile.diacritic_variants.find(ToLower(c));
  if (it == profile.diacritic_variants.end() || it->second.empty()) {
    return nullptr;
  }
  return &it->second;
}

bool IsCommaToken(const Token& t, const LanguageProfile& profile) {
  return t.surface == profile.comma;
}

// Eligible token and in-token positions for one letter-level draw.
struct Site {
  size_t token;
  std::vector<size_t> positions;
};

std::vector<Site> LetterSites(const Sentence& sentence, NoiseType type,
                              const LanguageProfile& profile) {
  std::vector<Site> sites;
  const auto& tokens = sentence.tokens();
  for (size_t t = 0; t < tokens.size(); ++t) {
    if (tokens[t].kind != TokenKind::kWord) continue;
    const std::u32string w = DecodeUtf8(tokens[t].surface);
    const size_t min_len =
        type == NoiseType::kIntroduceExtraLetters ? 1 : 2;
    if (w.size() < min_len) continue;
    Site site{t, {}};
    switch (type) {
      case NoiseType::kIntroduceExtraLetters:
        site.positions.resize(w.size() + 1);
        std::iota(site.positions.begin(), site.positions.end(), 0);
        break;
      case NoiseType::kDeleteLetters:
        for (size_t p = 0; p < w.size(); ++p) {
          if (IsLetter(w[p])) site.positions.push_back(p);
        }
        break;
      case NoiseType::kPermuteLetters:
        for (size_t p = 0; p + 1 < w.size(); ++p) {
          if (IsLetter(w[p]) && IsLetter(w[p + 1]) && w[p] != w[p + 1]) {
            site.positions.push_back(p);
          }
        }
        break;
      case NoiseType::kConfuseLetters:
        for (size_t p = 0; p < w.size(); ++p) {
          if (AdjacencyFor(w[p], profile) != nullptr) site.positions.push_back(p);
        }
        break;
      case NoiseType::kAddDiacritic:
        for (size_t p = 0; p < w.size(); ++p) {
          if (VariantsFor(w[p], profile) != nullptr) site.positions.push_back(p);
        }
        break;
      default:
        break;
    }
    if (!site.positions.empty()) sites.push_back(std::move(site));
  }
  return sites;
}

std::string Splice(std::string_view word, size_t pos, size_t erase,
                   std::u32string_view insert) {
  std::u32string w = DecodeUtf8(word);
  w.replace(pos, erase, insert);
  return EncodeUtf8(w);
}

std::u32string Slice(std::string_view word, size_t pos, size_t len) {
  return DecodeUtf8(word).substr(pos, len);
}

// Applies a single letter-level edit to one token.
Sentence ApplyLetterEdit(const Sentence& sentence, const EditRecord& edit,
                         const LanguageProfile& profile) {
  const size_t t = *edit.token_index;
  if (t >= sentence.size()) throw NoiseError("edit token index out of range");
  const std::string& word = sentence.tokens()[t].surface;
  const size_t pos = *edit.char_position;
  const std::u32string removed = DecodeUtf8(edit.removed);
  const std::u32string inserted = DecodeUtf8(edit.inserted);
  const std::u32string w = DecodeUtf8(word);
  if (pos > w.size() || w.compare(pos, removed.size(), removed) != 0) {
    throw NoiseError("edit does not match token '" + word + "'");
  }
  (void)profile;
  return sentence.WithSurface(t, Splice(word, pos, removed.size(), inserted));
}

Sentence ApplySentenceKernel(const Sentence& sentence, NoiseType type,
                             const LanguageProfile& profile) {
  switch (type) {
    case NoiseType::kRemovePunctuation:
      return RemovePunctuation(sentence);
    case NoiseType::kLatinize:
      return Latinize(sentence, profile);
    case NoiseType::kPhoneticLatinize:
      return PhoneticLatinize(sentence, profile);
    default:
      throw NoiseError("not a sentence-level noise type");
  }
}

}  // namespace

std::string_view NoiseTypeName(NoiseType type) {
  for (const auto& n : kNames) {
    if (n.type == type) return n.name;
  }
  return "unknown";
}

std::optional<NoiseType> ParseNoiseType(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.type;
  }
  return std::nullopt;
}

bool IsSentenceLevel(NoiseType type) {
  return type == NoiseType::kRemovePunctuation ||
         type == NoiseType::kLatinize ||
         type == NoiseType::kPhoneticLatinize;
}

// ---------------------------------------------------------------------------
// Word kernels

std::string InsertLetter(std::string_view word, size_t pos, char32_t letter) {
  const std::u32string w = DecodeUtf8(word);
  CheckPosition(pos, w.size() + 1, "insert_letter");
  return Splice(word, pos, 0, std::u32string(1, letter));
}

std::string DeleteLetter(std::string_view word, size_t pos) {
  const std::u32string w = DecodeUtf8(word);
  if (w.size() < 2) throw NoiseError("delete_letter: word too short");
  CheckPosition(pos, w.size(), "delete_letter");
  return Splice(word, pos, 1, U"");
}

std::string PermuteLetters(std::string_view word, size_t pos) {
  std::u32string w = DecodeUtf8(word);
  if (w.size() < 2) throw NoiseError("permute_letters: word too short");
  CheckPosition(pos, w.size() - 1, "permute_letters");
  if (w[pos] == w[pos + 1]) {
    throw NoiseError("permute_letters: swapping equal letters is a no-op");
  }
  std::swap(w[pos], w[pos + 1]);
  return EncodeUtf8(w);
}

std::string ConfuseLetter(std::string_view word, size_t pos,
                          size_t adjacency_choice,
                          const LanguageProfile& profile) {
  std::u32string w = DecodeUtf8(word);
  CheckPosition(pos, w.size(), "confuse_letter");
  const std::u32string* neighbours = AdjacencyFor(w[pos], profile);
  if (neighbours == nullptr) {
    throw NoiseError("confuse_letter: '" + EncodeUtf8(w[pos]) +
                     "' has no keyboard neighbours");
  }
  CheckPosition(adjacency_choice, neighbours->size(), "confuse_letter choice");
  w[pos] = MatchCase((*neighbours)[adjacency_choice], w[pos]);
  return EncodeUtf8(w);
}

std::string AddDiacritic(std::string_view word, size_t pos,
                         size_t variant_choice,
                         const LanguageProfile& profile) {
  std::u32string w = DecodeUtf8(word);
  CheckPosition(pos, w.size(), "add_diacritic");
  const std::u32string* variants = VariantsFor(w[pos], profile);
  if (variants == nullptr) {
    throw NoiseError("add_diacritic: '" + EncodeUtf8(w[pos]) +
                     "' supports no diacritic");
  }
  CheckPosition(variant_choice, variants->size(), "add_diacritic choice");
  w[pos] = MatchCase((*variants)[variant_choice], w[pos]);
  return EncodeUtf8(w);
}

// ---------------------------------------------------------------------------
// Sentence kernels

Sentence SampleSubstitute(const Sentence& sentence, size_t token_index,
                          std::string_view replacement,
                          const Lexicon& lexicon) {
  if (token_index >= sentence.size()) {
    throw NoiseError("sample_substitute: token index out of range");
  }
  const Token& token = sentence.tokens()[token_index];
  if (token.kind != TokenKind::kWord) {
    throw NoiseError("sample_substitute: token is not a word");
  }
  const std::string folded = FoldCase(NormalizeNfc(replacement));
  const auto neighbours = Ed1Neighbors(token.surface, lexicon);
  if (std::find(neighbours.begin(), neighbours.end(), folded) ==
      neighbours.end()) {
    throw NoiseError("sample_substitute: '" + std::string(replacement) +
                     "' is not a distance-1 neighbour of '" + token.surface +
                     "'");
  }
  const std::u32string recased =
      RecaseLike(DecodeUtf8(folded), DecodeUtf8(token.surface));
  return sentence.WithSurface(token_index, EncodeUtf8(recased));
}

Sentence RemovePunctuation(const Sentence& sentence) {
  std::vector<bool> remove(sentence.size());
  bool any = false;
  for (size_t i = 0; i < sentence.size(); ++i) {
    remove[i] = sentence.tokens()[i].kind == TokenKind::kPunctuation;
    any = any || remove[i];
  }
  if (!any) return sentence;
  return sentence.Without(remove);
}

Sentence AddComma(const Sentence& sentence, size_t token_index,
                  const LanguageProfile& profile) {
  if (token_index >= sentence.size() ||
      sentence.tokens()[token_index].kind != TokenKind::kWord) {
    throw NoiseError("add_comma: gap must follow a word token");
  }
  if (token_index + 1 < sentence.size() &&
      IsCommaToken(sentence.tokens()[token_index + 1], profile)) {
    throw NoiseError("add_comma: a comma already follows this word");
  }
  return sentence.WithInserted(token_index + 1, profile.comma,
                               TokenKind::kPunctuation, /*attach_left=*/true);
}

std::string LatinizeWord(std::string_view word,
                         const LanguageProfile& profile) {
  std::u32string w = DecodeUtf8(word);
  for (char32_t& c : w) {
    auto it = profile.latinize_map.find(ToLower(c));
    if (it != profile.latinize_map.end()) c = MatchCase(it->second, c);
  }
  return EncodeUtf8(w);
}

namespace {

std::string PhoneticWord(std::string_view word,
                         const LanguageProfile& profile) {
  std::u32string out;
  for (char32_t c : DecodeUtf8(word)) {
    auto it = profile.phonetic_map.find(ToLower(c));
    if (it == profile.phonetic_map.end()) {
      out.push_back(c);
      continue;
    }
    std::u32string seq = it->second;
    if (IsUpper(c) && !seq.empty()) seq.front() = ToUpper(seq.front());
    out += seq;
  }
  return EncodeUtf8(out);
}

template <typename Fn>
Sentence MapSurfaces(const Sentence& sentence, Fn fn) {
  std::vector<Token> tokens = sentence.tokens();
  bool changed = false;
  for (Token& t : tokens) {
    std::string mapped = fn(t.surface);
    if (mapped != t.surface) {
      t.surface = std::move(mapped);
      changed = true;
    }
  }
  if (!changed) return sentence;
  return Sentence::FromParts(std::move(tokens), sentence.joiners());
}

}  // namespace

Sentence Latinize(const Sentence& sentence, const LanguageProfile& profile) {
  return MapSurfaces(sentence, [&](const std::string& s) {
    return LatinizeWord(s, profile);
  });
}

Sentence PhoneticLatinize(const Sentence& sentence,
                          const LanguageProfile& profile) {
  return MapSurfaces(sentence, [&](const std::string& s) {
    return PhoneticWord(s, profile);
  });
}

// ---------------------------------------------------------------------------
// Randomized driver

NoisedSentence ApplyNoise(const Sentence& sentence, NoiseType type,
                          const LanguageProfile& profile,
                          const Lexicon& lexicon, uint64_t seed,
                          const NoiseOptions& options) {
  NoisedSentence result;
  result.original = sentence;
  result.seed = seed;
  SplitMix64 rng(seed);

  Sentence current = sentence;
  std::vector<EditRecord> edits;

  if (IsSentenceLevel(type)) {
    current = ApplySentenceKernel(sentence, type, profile);
    if (current.raw() != sentence.raw()) {
      edits.push_back(EditRecord{type, std::nullopt, std::nullopt, "", ""});
    }
  } else {
    const int rounds = std::max(1, options.edits_per_sentence);
    for (int round = 0; round < rounds; ++round) {
      if (type == NoiseType::kSampleSubstitute) {
        std::vector<std::pair<size_t, std::vector<std::string>>> sites;
        for (size_t t = 0; t < current.size(); ++t) {
          const Token& token = current.tokens()[t];
          if (token.kind != TokenKind::kWord) continue;
          if (DecodeUtf8(token.surface).size() < 2) continue;
          auto neighbours = Ed1Neighbors(token.surface, lexicon);
          if (!neighbours.empty()) sites.emplace_back(t, std::move(neighbours));
        }
        if (sites.empty()) break;
        const auto& [t, neighbours] = sites[rng.Uniform(sites.size())];
        size_t pick;
        if (options.frequency_weighted_substitution) {
          uint64_t total = 0;
          for (const auto& n : neighbours) total += lexicon.Count(n);
          uint64_t r = rng.Uniform(total);
          pick = 0;
          while (r >= lexicon.Count(neighbours[pick])) {
            r -= lexicon.Count(neighbours[pick]);
            ++pick;
          }
        } else {
          pick = rng.Uniform(neighbours.size());
        }
        const std::string before = current.tokens()[t].surface;
        current = SampleSubstitute(current, t, neighbours[pick], lexicon);
        edits.push_back(EditRecord{type, t, std::nullopt, before,
                                   current.tokens()[t].surface});
        continue;
      }

      if (type == NoiseType::kAddComma) {
        std::vector<size_t> gaps;
        const auto& tokens = current.tokens();
        for (size_t t = 0; t + 1 < tokens.size(); ++t) {
          if (tokens[t].kind == TokenKind::kWord &&
              (tokens[t + 1].kind == TokenKind::kWord ||
               tokens[t + 1].kind == TokenKind::kNumber)) {
            gaps.push_back(t);
          }
        }
        if (gaps.empty()) break;
        const size_t t = gaps[rng.Uniform(gaps.size())];
        current = AddComma(current, t, profile);
        edits.push_back(
            EditRecord{type, t, std::nullopt, "", profile.comma});
        continue;
      }

      const std::vector<Site> sites = LetterSites(current, type, profile);
      if (sites.empty()) break;
      const Site& site = sites[rng.Uniform(sites.size())];
      const size_t pos = site.positions[rng.Uniform(site.positions.size())];
      const std::string& word = current.tokens()[site.token].surface;
      const std::u32string w = DecodeUtf8(word);

      EditRecord edit{type, site.token, pos, "", ""};
      switch (type) {
        case NoiseType::kIntroduceExtraLetters: {
          const char32_t letter =
              profile.alphabet[rng.Uniform(profile.alphabet.size())];
          edit.inserted = EncodeUtf8(letter);
          break;
        }
        case NoiseType::kDeleteLetters:
          edit.removed = EncodeUtf8(w[pos]);
          break;
        case NoiseType::kPermuteLetters:
          edit.removed = EncodeUtf8(w.substr(pos, 2));
          edit.inserted = EncodeUtf8(std::u32string{w[pos + 1], w[pos]});
          break;
        case NoiseType::kConfuseLetters: {
          const std::u32string& adj = *AdjacencyFor(w[pos], profile);
          const std::string out =
              ConfuseLetter(word, pos, rng.Uniform(adj.size()), profile);
          edit.removed = EncodeUtf8(w[pos]);
          edit.inserted = EncodeUtf8(DecodeUtf8(out)[pos]);
          break;
        }
        case NoiseType::kAddDiacritic: {
          const std::u32string& variants = *VariantsFor(w[pos], profile);
          const std::string out =
              AddDiacritic(word, pos, rng.Uniform(variants.size()), profile);
          edit.removed = EncodeUtf8(w[pos]);
          edit.inserted = EncodeUtf8(DecodeUtf8(out)[pos]);
          break;
        }
        default:
          throw NoiseError("unhandled noise type");
      }
      current = ApplyLetterEdit(current, edit, profile);
      edits.push_back(std::move(edit));
    }
  }

  // Several edits can cancel out (e.g. two swaps of the same pair); such a
  // result is reported as a no-op.
  if (current.raw() == sentence.raw()) {
    edits.clear();
    current = sentence;
  }
  result.noised_text = current.raw();
  result.noised = std::move(current);
  result.edits = std::move(edits);
  return result;
}

Sentence ReplayEdits(const Sentence& original,
                     const std::vector<EditRecord>& edits,
                     const LanguageProfile& profile) {
  Sentence current = original;
  for (const EditRecord& edit : edits) {
    if (IsSentenceLevel(edit.noise_type)) {
      current = ApplySentenceKernel(current, edit.noise_type, profile);
    } else if (edit.noise_type == NoiseType::kAddComma) {
      if (!edit.token_index) throw NoiseError("add-comma edit without token");
      current = AddComma(current, *edit.token_index, profile);
    } else if (edit.noise_type == NoiseType::kSampleSubstitute) {
      if (!edit.token_index || *edit.token_index >= current.size() ||
          current.tokens()[*edit.token_index].surface != edit.removed) {
        throw NoiseError("substitution edit does not match sentence");
      }
      current = current.WithSurface(*edit.token_index, edit.inserted);
    } else {
      if (!edit.token_index || !edit.char_position) {
        throw NoiseError("letter edit without position");
      }
      current = ApplyLetterEdit(current, edit, profile);
    }
  }
  return current;
}

}  // namespace orthonoise
