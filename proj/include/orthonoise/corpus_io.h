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

// Line-oriented UTF-8 file I/O. Lines are split on '\n' only; a final
// newline does not start an extra line.

#ifndef ORTHONOISE_CORPUS_IO_H_
#define ORTHONOISE_CORPUS_IO_H_

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthonoise {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown for malformed content; carries the 1-based line number.
class LineError : public std::runtime_error {
 public:
  LineError(size_t line, const std::string& message)
      : std::runtime_error(message), line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view content);

// Throws IoError when unreadable, LineError on invalid UTF-8.
std::vector<std::string> ReadLines(const std::filesystem::path& path);
std::vector<std::string> SplitLines(std::string_view content);
void WriteLines(const std::filesystem::path& path,
                std::span<const std::string> lines);
std::string JoinLines(std::span<const std::string> lines);

}  // namespace orthonoise

#endif  // ORTHONOISE_CORPUS_IO_H_
