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

// Text representation shared by the noise models and the metrics: a lossless
// rule-based tokenizer, per-language resources (LanguageProfile) and the
// word lexicon used for real-word substitutions.

#ifndef ORTHONOISE_TEXT_MODEL_H_
#define ORTHONOISE_TEXT_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace orthonoise {

enum class TokenKind { kWord, kPunctuation, kNumber, kOther };

std::string_view TokenKindName(TokenKind kind);

// Half-open range of code point offsets into Sentence::raw().
struct CharSpan {
  size_t start = 0;
  size_t end = 0;
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  CharSpan span;
};

struct LanguageProfile {
  std::string language_tag;
  std::u32string alphabet;  // lowercase NFC letters, in document order
  std::unordered_map<char32_t, std::u32string> diacritic_variants;
  std::unordered_map<char32_t, char32_t> latinize_map;
  std::unordered_map<char32_t, std::u32string> phonetic_map;
  std::unordered_map<char32_t, std::u32string> keyboard_adjacency;
  std::unordered_set<char32_t> punctuation;
  std::string comma = ",";

  bool InAlphabet(char32_t lower) const;
  bool IsPunctuation(char32_t c) const { return punctuation.contains(c); }
};

class ProfileError : public std::runtime_error {
 public:
  ProfileError(std::string key, const std::string& message)
      : std::runtime_error(message), key_(std::move(key)) {}
  // Offending JSON key (or "document" for parse errors).
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Parses and validates the JSON profile format. Throws ProfileError.
LanguageProfile LoadProfile(std::string_view document);
// Checks every profile invariant; throws ProfileError naming the key.
void ValidateProfile(const LanguageProfile& profile);

// Tags of the profiles compiled into the library (en, et, lt, lv).
std::vector<std::string> BundledProfileTags();
// Throws ProfileError for unknown tags.
LanguageProfile BundledProfile(std::string_view tag);
std::string_view BundledProfileDocument(std::string_view tag);

// A tokenized line. Tokens are separated by joiners (the exact inter-token
// text), so joiners().size() == tokens().size() + 1 and
// raw() == j[0] + t[0] + j[1] + ... + t[n-1] + j[n].
class Sentence {
 public:
  Sentence() : joiners_{""} {}

  // Assembles a sentence from parts, recomputing raw() and the token spans.
  // Throws std::invalid_argument when joiners.size() != tokens.size() + 1.
  static Sentence FromParts(std::vector<Token> tokens,
                            std::vector<std::string> joiners);

  const std::string& raw() const { return raw_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  const std::vector<std::string>& joiners() const { return joiners_; }
  size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  // Copy with token `index` replaced by `surface` (kind unchanged).
  Sentence WithSurface(size_t index, std::string surface) const;

  // Copy with a token inserted so that it ends up at `position`
  // (0 <= position <= size()). An attached token takes no space before it
  // and keeps the old gap text after it; other tokens get a single space.
  Sentence WithInserted(size_t position, std::string surface, TokenKind kind,
                        bool attach_left) const;

  // Copy without the tokens whose index is flagged in `remove`. Where removed
  // tokens sat between two surviving tokens, the gap becomes one space; at the
  // edges the outermost original joiner is kept.
  Sentence Without(const std::vector<bool>& remove) const;

 private:
  void Rebuild();

  std::string raw_;
  std::vector<Token> tokens_;
  std::vector<std::string> joiners_;
};

// NFC-normalizes `text` and splits it into word, number, punctuation and
// other tokens. Throws Utf8Error on malformed UTF-8.
Sentence Tokenize(std::string_view text, const LanguageProfile& profile);
std::string Detokenize(const Sentence& sentence);

// Token surfaces only; the shape the metrics consume.
std::vector<std::string> TokenSurfaces(std::string_view text,
                                       const LanguageProfile& profile);

TokenKind ClassifyToken(std::u32string_view surface,
                        const LanguageProfile& profile);

// Word forms (case-folded, NFC) with corpus counts.
class Lexicon {
 public:
  Lexicon() = default;
  // Keys must already be case-folded NFC word forms.
  explicit Lexicon(std::unordered_map<std::string, uint64_t> entries);

  uint64_t Count(std::string_view form) const;
  bool Contains(std::string_view form) const { return Count(form) > 0; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::unordered_map<std::string, uint64_t>& entries() const {
    return entries_;
  }

  // Entries by descending count, ties in byte-lexicographic order.
  std::vector<std::pair<std::string, uint64_t>> Sorted() const;

  // Ids of entries sharing at least one single-deletion variant with (or
  // being a single deletion of) `folded`. A superset of the distance-1
  // neighbours.
  std::vector<uint32_t> Candidates(std::u32string_view folded) const;
  const std::string& form(uint32_t id) const { return forms_[id]; }
  const std::u32string& codepoints(uint32_t id) const { return decoded_[id]; }

 private:
  std::unordered_map<std::string, uint64_t> entries_;
  std::vector<std::string> forms_;
  std::vector<std::u32string> decoded_;
  // Keys: every form and every single-deletion variant of every form.
  std::unordered_map<std::u32string, std::vector<uint32_t>> deletion_index_;
};

// Accumulates word counts line by line.
class LexiconBuilder {
 public:
  explicit LexiconBuilder(const LanguageProfile& profile)
      : profile_(&profile) {}
  void AddLine(std::string_view line);
  // Throws std::invalid_argument when min_count < 1.
  Lexicon Build(uint64_t min_count) const;

 private:
  const LanguageProfile* profile_;
  std::unordered_map<std::string, uint64_t> counts_;
};

Lexicon BuildLexicon(std::span<const std::string> lines,
                     const LanguageProfile& profile, uint64_t min_count = 2);
Lexicon BuildLexicon(std::istream& lines, const LanguageProfile& profile,
                     uint64_t min_count = 2);

// "word<TAB>count" lines. ReadLexicon throws std::runtime_error with the
// failing line number.
Lexicon ReadLexicon(std::istream& in);
void WriteLexicon(const Lexicon& lexicon, std::ostream& out);

// True when a and b are at Damerau-Levenshtein distance exactly 1.
bool AtEditDistanceOne(std::u32string_view a, std::u32string_view b);

// Lexicon forms at distance exactly 1 from the case-folded `word`, most
// frequent first, ties lexicographic.
std::vector<std::string> Ed1Neighbors(std::string_view word,
                                      const Lexicon& lexicon);

}  // namespace orthonoise

#endif  // ORTHONOISE_TEXT_MODEL_H_
