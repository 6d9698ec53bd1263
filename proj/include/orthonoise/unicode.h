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

// UTF-8 <-> code point conversion, NFC normalization and the handful of
// character-class queries the tokenizer and noise kernels need. Positions
// used throughout the library count Unicode scalar values, not bytes.

#ifndef ORTHONOISE_UNICODE_H_
#define ORTHONOISE_UNICODE_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace orthonoise {

class Utf8Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws Utf8Error on malformed input.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t c);

bool IsValidUtf8(std::string_view text);

std::string NormalizeNfc(std::string_view text);
std::u32string NormalizeNfc(std::u32string_view text);

bool IsLetter(char32_t c);  // alphabetic or combining mark
bool IsDigit(char32_t c);
bool IsWhitespace(char32_t c);
bool IsUpper(char32_t c);
char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);

// Simple (per code point) case folding.
std::u32string FoldCase(std::u32string_view text);
std::string FoldCase(std::string_view text);

// Re-cases `word` after the pattern of `model`: all-caps (two or more cased
// letters, all upper) stays all-caps, an initial capital is kept, anything
// else becomes lowercase.
std::u32string RecaseLike(std::u32string_view word, std::u32string_view model);

// Gives `c` the case of `model`.
char32_t MatchCase(char32_t c, char32_t model);

}  // namespace orthonoise

#endif  // ORTHONOISE_UNICODE_H_
