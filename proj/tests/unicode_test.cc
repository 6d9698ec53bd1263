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

#include "orthonoise/unicode.h"

#include <gtest/gtest.h>

namespace orthonoise {
namespace {

TEST(Utf8Test, RoundTrip) {
  const std::string text = "Balta jūra, zaļa zeme. 𝄞";
  const std::u32string decoded = DecodeUtf8(text);
  EXPECT_EQ(decoded.size(), 24u);
  EXPECT_EQ(EncodeUtf8(decoded), text);
}

TEST(Utf8Test, RejectsMalformed) {
  EXPECT_FALSE(IsValidUtf8("\xC3"));
  EXPECT_FALSE(IsValidUtf8("\xC0\xAF"));          // overlong
  EXPECT_FALSE(IsValidUtf8("\xED\xA0\x80"));      // surrogate
  EXPECT_THROW(DecodeUtf8("ab\xFF"), Utf8Error);
  EXPECT_TRUE(IsValidUtf8("ļ"));
}

TEST(NfcTest, ComposesDecomposedInput) {
  // u + combining macron -> ū
  EXPECT_EQ(NormalizeNfc("ju\xCC\x84ra"), "jūra");
  EXPECT_EQ(NormalizeNfc("plain ascii"), "plain ascii");
}

TEST(CaseTest, RecaseFollowsModel) {
  EXPECT_EQ(EncodeUtf8(RecaseLike(U"zemi", U"Zeme")), "Zemi");
  EXPECT_EQ(EncodeUtf8(RecaseLike(U"zemi", U"ZEME")), "ZEMI");
  EXPECT_EQ(EncodeUtf8(RecaseLike(U"zemi", U"zeme")), "zemi");
  EXPECT_EQ(MatchCase(U'ū', U'U'), U'Ū');
  EXPECT_EQ(FoldCase(std::string("ŠĪ")), "šī");
}

TEST(ClassTest, LettersAndDigits) {
  EXPECT_TRUE(IsLetter(U'ļ'));
  EXPECT_TRUE(IsLetter(U'̄'));
  EXPECT_FALSE(IsLetter(U'7'));
  EXPECT_TRUE(IsDigit(U'7'));
  EXPECT_TRUE(IsWhitespace(U' '));
  EXPECT_TRUE(IsUpper(U'Ņ'));
}

}  // namespace
}  // namespace orthonoise
