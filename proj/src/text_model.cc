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

#include "orthonoise/text_model.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "json.hpp"
#include "orthonoise/unicode.h"

namespace orthonoise {

namespace internal {
extern const std::pair<std::string_view, std::string_view> kBundledProfiles[];
extern const int kBundledProfileCount;
}  // namespace internal

namespace {

using json = nlohmann::json;

bool IsWordJoiner(char32_t c) {
  return c == U'-' || c == U'\'' || c == U'’';
}

std::u32string NfcCodepoints(const std::string& s) {
  return DecodeUtf8(NormalizeNfc(s));
}

char32_t SingleLetter(const std::string& s, const std::string& key) {
  const std::u32string cps = NfcCodepoints(s);
  if (cps.size() != 1) {
    throw ProfileError(key, "profile key '" + key +
                                "': expected a single character, got '" + s +
                                "'");
  }
  return cps.front();
}

const json& Required(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw ProfileError(key, std::string("profile is missing required key '") +
                                key + "'");
  }
  return *it;
}

std::string RequiredString(const json& doc, const char* key) {
  const json& value = Required(doc, key);
  if (!value.is_string()) {
    throw ProfileError(key, std::string("profile key '") + key +
                                "' must be a string");
  }
  return value.get<std::string>();
}

const json& RequiredObject(const json& doc, const char* key) {
  const json& value = Required(doc, key);
  if (!value.is_object()) {
    throw ProfileError(key, std::string("profile key '") + key +
                                "' must be an object");
  }
  return value;
}

std::string KeyPath(std::string_view map, char32_t letter) {
  return std::string(map) + "." + EncodeUtf8(letter);
}

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord:
      return "word";
    case TokenKind::kPunctuation:
      return "punctuation";
    case TokenKind::kNumber:
      return "number";
    case TokenKind::kOther:
      return "other";
  }
  return "other";
}

bool LanguageProfile::InAlphabet(char32_t lower) const {
  return alphabet.find(lower) != std::u32string::npos;
}

LanguageProfile LoadProfile(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ProfileError("document", std::string("profile parse error: ") +
                                       e.what());
  }
  if (!doc.is_object()) {
    throw ProfileError("document", "profile must be a JSON object");
  }

  LanguageProfile profile;
  try {
    profile.language_tag = RequiredString(doc, "language_tag");
    profile.alphabet = NfcCodepoints(RequiredString(doc, "alphabet"));

    for (const auto& [key, value] :
         RequiredObject(doc, "diacritic_variants").items()) {
      const std::string path = "diacritic_variants." + key;
      const char32_t base = SingleLetter(key, path);
      if (!value.is_array()) {
        throw ProfileError(path, "profile key '" + path +
                                     "' must be an array of letters");
      }
      std::u32string variants;
      for (const json& v : value) {
        if (!v.is_string()) {
          throw ProfileError(path, "profile key '" + path +
                                       "' must hold strings");
        }
        variants.push_back(SingleLetter(v.get<std::string>(), path));
      }
      profile.diacritic_variants[base] = std::move(variants);
    }

    for (const auto& [key, value] :
         RequiredObject(doc, "latinize_map").items()) {
      const std::string path = "latinize_map." + key;
      if (!value.is_string()) {
        throw ProfileError(path, "profile key '" + path + "' must be a string");
      }
      profile.latinize_map[SingleLetter(key, path)] =
          SingleLetter(value.get<std::string>(), path);
    }

    for (const auto& [key, value] :
         RequiredObject(doc, "phonetic_map").items()) {
      const std::string path = "phonetic_map." + key;
      if (!value.is_string() || value.get<std::string>().empty()) {
        throw ProfileError(path,
                           "profile key '" + path + "' must be a non-empty string");
      }
      profile.phonetic_map[SingleLetter(key, path)] =
          NfcCodepoints(value.get<std::string>());
    }

    for (const auto& [key, value] :
         RequiredObject(doc, "keyboard_adjacency").items()) {
      const std::string path = "keyboard_adjacency." + key;
      if (!value.is_string()) {
        throw ProfileError(path, "profile key '" + path + "' must be a string");
      }
      profile.keyboard_adjacency[SingleLetter(key, path)] =
          NfcCodepoints(value.get<std::string>());
    }

    for (char32_t c : NfcCodepoints(RequiredString(doc, "punctuation"))) {
      profile.punctuation.insert(c);
    }
    if (auto it = doc.find("comma"); it != doc.end()) {
      if (!it->is_string() || it->get<std::string>().empty()) {
        throw ProfileError("comma", "profile key 'comma' must be a non-empty string");
      }
      profile.comma = NormalizeNfc(it->get<std::string>());
    }
  } catch (const Utf8Error& e) {
    throw ProfileError("document", std::string("profile is not UTF-8: ") +
                                       e.what());
  }

  ValidateProfile(profile);
  return profile;
}

void ValidateProfile(const LanguageProfile& profile) {
  if (profile.alphabet.empty()) {
    throw ProfileError("alphabet", "profile alphabet is empty");
  }
  for (char32_t c : profile.alphabet) {
    if (!IsLetter(c) || ToLower(c) != c) {
      throw ProfileError("alphabet", "alphabet entry '" + EncodeUtf8(c) +
                                         "' is not a lowercase letter");
    }
  }
  for (const auto& [letter, base] : profile.latinize_map) {
    if (!profile.InAlphabet(letter)) {
      throw ProfileError(KeyPath("latinize_map", letter),
                         "latinize_map key '" + EncodeUtf8(letter) +
                             "' is not in the alphabet");
    }
    (void)base;
  }
  for (const auto& [letter, sequence] : profile.phonetic_map) {
    if (!profile.InAlphabet(letter)) {
      throw ProfileError(KeyPath("phonetic_map", letter),
                         "phonetic_map key '" + EncodeUtf8(letter) +
                             "' is not in the alphabet");
    }
  }
  // Phonetic output must not contain further phonetic_map keys, otherwise
  // the transform would not be idempotent.
  for (const auto& [letter, sequence] : profile.phonetic_map) {
    for (char32_t c : sequence) {
      if (profile.phonetic_map.contains(ToLower(c))) {
        throw ProfileError(KeyPath("phonetic_map", letter),
                           "phonetic_map value for '" + EncodeUtf8(letter) +
                               "' contains mapped letter '" + EncodeUtf8(c) +
                               "'");
      }
    }
  }
  for (const auto& [base, variants] : profile.diacritic_variants) {
    const std::string path = KeyPath("diacritic_variants", base);
    if (variants.empty()) {
      throw ProfileError(path, "diacritic_variants list for '" +
                                   EncodeUtf8(base) + "' is empty");
    }
    for (char32_t v : variants) {
      auto it = profile.latinize_map.find(v);
      if (it == profile.latinize_map.end() || it->second != base) {
        throw ProfileError(path, "variant '" + EncodeUtf8(v) +
                                     "' does not latinize back to '" +
                                     EncodeUtf8(base) + "'");
      }
    }
  }
  for (const auto& [letter, neighbours] : profile.keyboard_adjacency) {
    if (neighbours.find(letter) != std::u32string::npos) {
      throw ProfileError(KeyPath("keyboard_adjacency", letter),
                         "keyboard_adjacency for '" + EncodeUtf8(letter) +
                             "' lists the letter itself");
    }
  }
}

std::vector<std::string> BundledProfileTags() {
  std::vector<std::string> tags;
  for (int i = 0; i < internal::kBundledProfileCount; ++i) {
    tags.emplace_back(internal::kBundledProfiles[i].first);
  }
  return tags;
}

std::string_view BundledProfileDocument(std::string_view tag) {
  for (int i = 0; i < internal::kBundledProfileCount; ++i) {
    if (internal::kBundledProfiles[i].first == tag) {
      return internal::kBundledProfiles[i].second;
    }
  }
  throw ProfileError("language_tag",
                     "no bundled profile '" + std::string(tag) + "'");
}

LanguageProfile BundledProfile(std::string_view tag) {
  return LoadProfile(BundledProfileDocument(tag));
}

// ---------------------------------------------------------------------------
// Sentence

Sentence Sentence::FromParts(std::vector<Token> tokens,
                             std::vector<std::string> joiners) {
  if (joiners.size() != tokens.size() + 1) {
    throw std::invalid_argument("Sentence needs tokens.size() + 1 joiners");
  }
  Sentence s;
  s.tokens_ = std::move(tokens);
  s.joiners_ = std::move(joiners);
  s.Rebuild();
  return s;
}

void Sentence::Rebuild() {
  raw_.clear();
  size_t offset = 0;
  auto count = [](const std::string& s) {
    size_t n = 0;
    for (char c : s) {
      if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
    }
    return n;
  };
  for (size_t i = 0; i < tokens_.size(); ++i) {
    raw_ += joiners_[i];
    offset += count(joiners_[i]);
    const size_t len = count(tokens_[i].surface);
    tokens_[i].span = {offset, offset + len};
    raw_ += tokens_[i].surface;
    offset += len;
  }
  raw_ += joiners_.back();
}

Sentence Sentence::WithSurface(size_t index, std::string surface) const {
  if (index >= tokens_.size()) {
    throw std::out_of_range("token index out of range");
  }
  Sentence s = *this;
  s.tokens_[index].surface = std::move(surface);
  s.Rebuild();
  return s;
}

Sentence Sentence::WithInserted(size_t position, std::string surface,
                                TokenKind kind, bool attach_left) const {
  if (position > tokens_.size()) {
    throw std::out_of_range("insert position out of range");
  }
  Sentence s = *this;
  const std::string gap = joiners_[position];
  std::string before;
  std::string after;
  if (attach_left) {
    before = "";
    after = gap;
    if (after.empty() && position < tokens_.size()) after = " ";
  } else if (position == 0) {
    before = gap;
    after = " ";
  } else {
    before = " ";
    after = gap;
  }
  s.joiners_[position] = std::move(before);
  s.joiners_.insert(s.joiners_.begin() + static_cast<ptrdiff_t>(position) + 1,
                    std::move(after));
  s.tokens_.insert(s.tokens_.begin() + static_cast<ptrdiff_t>(position),
                   Token{std::move(surface), kind, {}});
  s.Rebuild();
  return s;
}

Sentence Sentence::Without(const std::vector<bool>& remove) const {
  if (remove.size() != tokens_.size()) {
    throw std::invalid_argument("removal mask size mismatch");
  }
  std::vector<Token> tokens;
  std::vector<std::string> joiners;
  joiners.push_back(joiners_.front());
  bool pending_gap = false;  // removed tokens since the last kept one
  for (size_t i = 0; i < tokens_.size(); ++i) {
    if (remove[i]) {
      pending_gap = true;
      continue;
    }
    if (!tokens.empty()) {
      joiners.push_back(pending_gap ? std::string(" ") : joiners_[i]);
    }
    pending_gap = false;
    tokens.push_back(tokens_[i]);
  }
  if (tokens.empty()) {
    // Everything went; keep the leading text only once.
    joiners.front() = joiners_.front();
    if (!tokens_.empty()) joiners.front() += joiners_.back();
    return FromParts({}, std::move(joiners));
  }
  joiners.push_back(joiners_.back());
  return FromParts(std::move(tokens), std::move(joiners));
}

// ---------------------------------------------------------------------------
// Tokenizer

TokenKind ClassifyToken(std::u32string_view surface,
                        const LanguageProfile& profile) {
  if (surface.empty()) return TokenKind::kOther;
  if (std::all_of(surface.begin(), surface.end(),
                  [&](char32_t c) { return profile.IsPunctuation(c); })) {
    return TokenKind::kPunctuation;
  }
  if (std::all_of(surface.begin(), surface.end(), IsDigit)) {
    return TokenKind::kNumber;
  }
  if (IsLetter(surface.front())) return TokenKind::kWord;
  return TokenKind::kOther;
}

Sentence Tokenize(std::string_view text, const LanguageProfile& profile) {
  const std::u32string cps = DecodeUtf8(NormalizeNfc(text));
  std::vector<Token> tokens;
  std::vector<std::string> joiners;
  std::u32string gap;

  auto emit = [&](size_t begin, size_t end, TokenKind kind) {
    joiners.push_back(EncodeUtf8(gap));
    gap.clear();
    tokens.push_back(
        Token{EncodeUtf8(std::u32string_view(cps).substr(begin, end - begin)),
              kind,
              {begin, end}});
  };

  auto is_other = [&](char32_t c) {
    return !IsWhitespace(c) && !IsLetter(c) && !IsDigit(c) &&
           !profile.IsPunctuation(c);
  };

  size_t i = 0;
  while (i < cps.size()) {
    const char32_t c = cps[i];
    if (IsWhitespace(c)) {
      gap.push_back(c);
      ++i;
    } else if (IsLetter(c)) {
      size_t j = i + 1;
      while (j < cps.size()) {
        if (IsLetter(cps[j])) {
          ++j;
        } else if (IsWordJoiner(cps[j]) && j + 1 < cps.size() &&
                   IsLetter(cps[j + 1])) {
          j += 2;
        } else {
          break;
        }
      }
      emit(i, j, TokenKind::kWord);
      i = j;
    } else if (IsDigit(c)) {
      size_t j = i + 1;
      while (j < cps.size() && IsDigit(cps[j])) ++j;
      emit(i, j, TokenKind::kNumber);
      i = j;
    } else if (profile.IsPunctuation(c)) {
      emit(i, i + 1, TokenKind::kPunctuation);
      ++i;
    } else {
      size_t j = i + 1;
      while (j < cps.size() && is_other(cps[j])) ++j;
      emit(i, j, TokenKind::kOther);
      i = j;
    }
  }
  joiners.push_back(EncodeUtf8(gap));
  return Sentence::FromParts(std::move(tokens), std::move(joiners));
}

std::string Detokenize(const Sentence& sentence) {
  std::string out;
  const auto& tokens = sentence.tokens();
  const auto& joiners = sentence.joiners();
  for (size_t i = 0; i < tokens.size(); ++i) {
    out += joiners[i];
    out += tokens[i].surface;
  }
  out += joiners.back();
  return out;
}

std::vector<std::string> TokenSurfaces(std::string_view text,
                                       const LanguageProfile& profile) {
  Sentence s = Tokenize(text, profile);
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const Token& t : s.tokens()) out.push_back(t.surface);
  return out;
}

// ---------------------------------------------------------------------------
// Lexicon

Lexicon::Lexicon(std::unordered_map<std::string, uint64_t> entries) {
  for (auto& [form, count] : entries) {
    if (count == 0 || form.empty()) continue;
    entries_.emplace(form, count);
  }
  forms_.reserve(entries_.size());
  for (const auto& [form, count] : entries_) forms_.push_back(form);
  std::sort(forms_.begin(), forms_.end());
  decoded_.reserve(forms_.size());
  for (uint32_t id = 0; id < forms_.size(); ++id) {
    decoded_.push_back(DecodeUtf8(forms_[id]));
    const std::u32string& w = decoded_.back();
    deletion_index_[w].push_back(id);
    for (size_t i = 0; i < w.size(); ++i) {
      if (i > 0 && w[i] == w[i - 1]) continue;  // same variant as i-1
      std::u32string variant = w;
      variant.erase(i, 1);
      deletion_index_[variant].push_back(id);
    }
  }
}

uint64_t Lexicon::Count(std::string_view form) const {
  auto it = entries_.find(std::string(form));
  return it == entries_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, uint64_t>> Lexicon::Sorted() const {
  std::vector<std::pair<std::string, uint64_t>> out(entries_.begin(),
                                                    entries_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

std::vector<uint32_t> Lexicon::Candidates(std::u32string_view folded) const {
  std::vector<uint32_t> out;
  auto collect = [&](const std::u32string& key) {
    auto it = deletion_index_.find(key);
    if (it != deletion_index_.end()) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  };
  std::u32string w(folded);
  // Forms that are w plus one letter, or share a deletion with w
  // (substitution, transposition), or equal w minus one letter.
  collect(w);
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] == w[i - 1]) continue;
    std::u32string variant = w;
    variant.erase(i, 1);
    collect(variant);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void LexiconBuilder::AddLine(std::string_view line) {
  const Sentence s = Tokenize(line, *profile_);
  for (const Token& t : s.tokens()) {
    if (t.kind != TokenKind::kWord) continue;
    const std::u32string folded = FoldCase(DecodeUtf8(t.surface));
    const bool valid = std::all_of(folded.begin(), folded.end(), [&](char32_t c) {
      return profile_->InAlphabet(c) || IsWordJoiner(c);
    });
    if (valid) ++counts_[EncodeUtf8(folded)];
  }
}

Lexicon LexiconBuilder::Build(uint64_t min_count) const {
  if (min_count < 1) throw std::invalid_argument("min_count must be >= 1");
  std::unordered_map<std::string, uint64_t> kept;
  for (const auto& [form, count] : counts_) {
    if (count >= min_count) kept.emplace(form, count);
  }
  return Lexicon(std::move(kept));
}

Lexicon BuildLexicon(std::span<const std::string> lines,
                     const LanguageProfile& profile, uint64_t min_count) {
  LexiconBuilder builder(profile);
  for (const std::string& line : lines) builder.AddLine(line);
  return builder.Build(min_count);
}

Lexicon BuildLexicon(std::istream& lines, const LanguageProfile& profile,
                     uint64_t min_count) {
  LexiconBuilder builder(profile);
  std::string line;
  while (std::getline(lines, line)) builder.AddLine(line);
  return builder.Build(min_count);
}

Lexicon ReadLexicon(std::istream& in) {
  std::unordered_map<std::string, uint64_t> entries;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": " + why);
    };
    if (tab == std::string::npos || tab == 0) fail("expected word<TAB>count");
    uint64_t count = 0;
    const char* first = line.data() + tab + 1;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, count);
    if (ec != std::errc() || ptr != last) fail("bad count");
    std::string form;
    try {
      form = EncodeUtf8(FoldCase(DecodeUtf8(NormalizeNfc(line.substr(0, tab)))));
    } catch (const Utf8Error&) {
      fail("invalid UTF-8");
    }
    entries[form] += count;
  }
  return Lexicon(std::move(entries));
}

void WriteLexicon(const Lexicon& lexicon, std::ostream& out) {
  for (const auto& [form, count] : lexicon.Sorted()) {
    out << form << '\t' << count << '\n';
  }
}

bool AtEditDistanceOne(std::u32string_view a, std::u32string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (b.size() - a.size() > 1) return false;
  size_t prefix = 0;
  while (prefix < a.size() && a[prefix] == b[prefix]) ++prefix;
  if (a.size() != b.size()) {
    // One insertion: the remainders must line up shifted by one.
    return a.substr(prefix) == b.substr(prefix + 1);
  }
  if (prefix == a.size()) return false;  // identical
  if (a.substr(prefix + 1) == b.substr(prefix + 1)) return true;
  return prefix + 1 < a.size() && a[prefix] == b[prefix + 1] &&
         a[prefix + 1] == b[prefix] &&
         a.substr(prefix + 2) == b.substr(prefix + 2);
}

std::vector<std::string> Ed1Neighbors(std::string_view word,
                                      const Lexicon& lexicon) {
  const std::u32string folded = FoldCase(DecodeUtf8(NormalizeNfc(word)));
  std::vector<std::pair<std::string, uint64_t>> found;
  for (uint32_t id : lexicon.Candidates(folded)) {
    if (AtEditDistanceOne(folded, lexicon.codepoints(id))) {
      found.emplace_back(lexicon.form(id), lexicon.Count(lexicon.form(id)));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> out;
  out.reserve(found.size());
  for (auto& [form, count] : found) out.push_back(std::move(form));
  return out;
}

}  // namespace orthonoise
