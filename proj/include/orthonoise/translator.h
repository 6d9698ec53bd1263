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

// The system under test. The harness only needs batch translation; adapters
// cover in-process stand-ins, line-protocol subprocesses and a JSON HTTP
// endpoint.

#ifndef ORTHONOISE_TRANSLATOR_H_
#define ORTHONOISE_TRANSLATOR_H_

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orthonoise {

class TranslatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Translator {
 public:
  virtual ~Translator() = default;

  // Returns exactly one translation per input, in order.
  virtual std::vector<std::string> Translate(
      std::span<const std::string> batch) = 0;

  virtual std::string id() const = 0;

  // True when Translate may be called from several threads at once.
  virtual bool concurrency_safe() const { return false; }
};

class IdentityTranslator : public Translator {
 public:
  std::vector<std::string> Translate(
      std::span<const std::string> batch) override {
    return {batch.begin(), batch.end()};
  }
  std::string id() const override { return "identity"; }
  bool concurrency_safe() const override { return true; }
};

class ConstantTranslator : public Translator {
 public:
  explicit ConstantTranslator(std::string text) : text_(std::move(text)) {}
  std::vector<std::string> Translate(
      std::span<const std::string> batch) override {
    return std::vector<std::string>(batch.size(), text_);
  }
  std::string id() const override { return "constant:" + text_; }
  bool concurrency_safe() const override { return true; }

 private:
  std::string text_;
};

// Wraps a per-sentence function.
class FunctionTranslator : public Translator {
 public:
  FunctionTranslator(std::string id,
                     std::function<std::string(const std::string&)> fn)
      : id_(std::move(id)), fn_(std::move(fn)) {}
  std::vector<std::string> Translate(
      std::span<const std::string> batch) override;
  std::string id() const override { return id_; }

 private:
  std::string id_;
  std::function<std::string(const std::string&)> fn_;
};

// Talks to a process that reads UTF-8 lines on stdin and writes one line per
// input on stdout. A crashed or misbehaving process is restarted and the
// batch resent, at most `max_retries` times.
class SubprocessTranslator : public Translator {
 public:
  struct Options {
    std::chrono::milliseconds batch_timeout{60000};
    int max_retries = 2;
  };

  // Throws TranslatorError if the command cannot be started.
  explicit SubprocessTranslator(std::vector<std::string> command);
  SubprocessTranslator(std::vector<std::string> command, Options options);
  ~SubprocessTranslator() override;

  SubprocessTranslator(const SubprocessTranslator&) = delete;
  SubprocessTranslator& operator=(const SubprocessTranslator&) = delete;

  std::vector<std::string> Translate(
      std::span<const std::string> batch) override;
  std::string id() const override;

  // Number of times the process was (re)started.
  int starts() const { return starts_; }

 private:
  void Start();
  void Stop();
  // Returns nullopt when the process died or broke the protocol.
  std::optional<std::vector<std::string>> RoundTrip(
      std::span<const std::string> batch, std::string* why);

  std::vector<std::string> command_;
  Options options_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  int starts_ = 0;
};

// POSTs {"texts": [...]} and expects {"translations": [...]}.
class HttpTranslator : public Translator {
 public:
  struct Options {
    size_t max_batch = 64;
    std::chrono::milliseconds timeout{60000};
    int max_retries = 2;
    std::chrono::milliseconds initial_backoff{500};
  };

  // `auth_header` is either "Name: value" or a bare Authorization value.
  // Throws TranslatorError for URLs that are not http://host[:port][/path].
  HttpTranslator(std::string endpoint, std::optional<std::string> auth_header);
  HttpTranslator(std::string endpoint, std::optional<std::string> auth_header,
                 Options options);

  std::vector<std::string> Translate(
      std::span<const std::string> batch) override;
  std::string id() const override { return "http:" + endpoint_; }

 private:
  std::vector<std::string> Post(std::span<const std::string> chunk);

  std::string endpoint_;
  std::string host_;
  int port_ = 80;
  std::string path_;
  std::string auth_name_;
  std::string auth_value_;
  Options options_;
};

// Builds a translator from a CLI spec: "identity", "constant:<text>",
// "cmd:<shell command>" or "http:<url>". Throws std::invalid_argument for
// unknown specs.
std::unique_ptr<Translator> MakeTranslator(
    std::string_view spec, std::optional<std::string> auth_header = {});

}  // namespace orthonoise

#endif  // ORTHONOISE_TRANSLATOR_H_
