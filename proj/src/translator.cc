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

#include "orthonoise/translator.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace orthonoise {
namespace {

using Clock = std::chrono::steady_clock;

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void CloseFd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

std::string JoinCommand(const std::vector<std::string>& command) {
  std::string out;
  for (const auto& part : command) {
    if (!out.empty()) out.push_back(' ');
    out += part;
  }
  return out;
}

}  // namespace

std::vector<std::string> FunctionTranslator::Translate(
    std::span<const std::string> batch) {
  std::vector<std::string> out;
  out.reserve(batch.size());
  for (const auto& s : batch) out.push_back(fn_(s));
  return out;
}

// ---------------------------------------------------------------------------
// SubprocessTranslator

SubprocessTranslator::SubprocessTranslator(std::vector<std::string> command)
    : SubprocessTranslator(std::move(command), Options{}) {}

SubprocessTranslator::SubprocessTranslator(std::vector<std::string> command,
                                           Options options)
    : command_(std::move(command)), options_(options) {
  if (command_.empty()) throw TranslatorError("empty translator command");
  IgnoreSigpipe();
  Start();
}

SubprocessTranslator::~SubprocessTranslator() { Stop(); }

std::string SubprocessTranslator::id() const {
  return "cmd:" + JoinCommand(command_);
}

void SubprocessTranslator::Start() {
  int in_pipe[2];
  int out_pipe[2];
  int err_pipe[2];  // carries errno from a failed exec
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) {
    throw TranslatorError(std::string("pipe: ") + std::strerror(errno));
  }
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw TranslatorError(std::string("pipe: ") + std::strerror(errno));
  }
  if (::pipe2(err_pipe, O_CLOEXEC) != 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw TranslatorError(std::string("pipe: ") + std::strerror(errno));
  }

  std::vector<char*> argv;
  for (auto& part : command_) argv.push_back(part.data());
  argv.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1],
                   err_pipe[0], err_pipe[1]}) {
      ::close(fd);
    }
    throw TranslatorError(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::signal(SIGPIPE, SIG_DFL);
    ::execvp(argv[0], argv.data());
    const int err = errno;
    [[maybe_unused]] ssize_t n = ::write(err_pipe[1], &err, sizeof(err));
    ::_exit(127);
  }

  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::close(err_pipe[1]);
  int child_errno = 0;
  ssize_t got;
  do {
    got = ::read(err_pipe[0], &child_errno, sizeof(child_errno));
  } while (got < 0 && errno == EINTR);
  ::close(err_pipe[0]);
  if (got > 0) {
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::waitpid(pid, nullptr, 0);
    throw TranslatorError("cannot start '" + JoinCommand(command_) +
                          "': " + std::strerror(child_errno));
  }

  pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
  ::fcntl(to_child_, F_SETFL, ::fcntl(to_child_, F_GETFL) | O_NONBLOCK);
  ::fcntl(from_child_, F_SETFL, ::fcntl(from_child_, F_GETFL) | O_NONBLOCK);
  ++starts_;
}

void SubprocessTranslator::Stop() {
  CloseFd(to_child_);
  if (pid_ > 0) {
    // Give a well-behaved process a moment to exit on EOF.
    const auto deadline = Clock::now() + std::chrono::milliseconds(500);
    int status;
    while (::waitpid(pid_, &status, WNOHANG) == 0) {
      if (Clock::now() > deadline) {
        ::kill(pid_, SIGKILL);
        ::waitpid(pid_, &status, 0);
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  }
  pid_ = -1;
  CloseFd(from_child_);
}

std::optional<std::vector<std::string>> SubprocessTranslator::RoundTrip(
    std::span<const std::string> batch, std::string* why) {
  std::string payload;
  for (const auto& line : batch) {
    payload += line;
    payload.push_back('\n');
  }
  size_t written = 0;
  std::string received;
  size_t lines_seen = 0;
  const auto deadline = Clock::now() + options_.batch_timeout;
  char buf[65536];

  while (lines_seen < batch.size()) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - Clock::now());
    if (left.count() <= 0) {
      *why = "timed out";
      return std::nullopt;
    }
    pollfd fds[2];
    nfds_t count = 0;
    fds[count++] = {from_child_, POLLIN, 0};
    if (written < payload.size()) fds[count++] = {to_child_, POLLOUT, 0};
    const int ready = ::poll(fds, count, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      *why = std::string("poll: ") + std::strerror(errno);
      return std::nullopt;
    }
    if (count == 2 && (fds[1].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t n = ::write(to_child_, payload.data() + written,
                                payload.size() - written);
      if (n < 0 && errno != EAGAIN && errno != EINTR) {
        *why = "process closed its input";
        return std::nullopt;
      }
      if (n > 0) written += static_cast<size_t>(n);
    }
    if (fds[0].revents & (POLLIN | POLLHUP | POLLERR)) {
      const ssize_t n = ::read(from_child_, buf, sizeof(buf));
      if (n == 0) {
        *why = "process exited after " + std::to_string(lines_seen) + " of " +
               std::to_string(batch.size()) + " lines";
        return std::nullopt;
      }
      if (n < 0) {
        if (errno == EAGAIN || errno == EINTR) continue;
        *why = std::string("read: ") + std::strerror(errno);
        return std::nullopt;
      }
      for (ssize_t k = 0; k < n; ++k) lines_seen += buf[k] == '\n';
      received.append(buf, static_cast<size_t>(n));
    }
  }
  if (lines_seen != batch.size() || received.empty() ||
      received.back() != '\n') {
    *why = "process wrote more lines than it was sent";
    return std::nullopt;
  }
  std::vector<std::string> out;
  out.reserve(batch.size());
  size_t start = 0;
  while (start < received.size()) {
    const size_t end = received.find('\n', start);
    std::string line = received.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

std::vector<std::string> SubprocessTranslator::Translate(
    std::span<const std::string> batch) {
  for (const auto& line : batch) {
    if (line.find('\n') != std::string::npos) {
      throw TranslatorError("input contains a newline");
    }
  }
  if (batch.empty()) return {};
  std::string why;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (pid_ < 0) Start();
    if (auto out = RoundTrip(batch, &why)) return *std::move(out);
    // Protocol state is unknown; restart before retrying.
    if (pid_ > 0) ::kill(pid_, SIGKILL);
    Stop();
  }
  throw TranslatorError("translator '" + JoinCommand(command_) +
                        "' failed after " +
                        std::to_string(options_.max_retries) +
                        " retries: " + why);
}

// ---------------------------------------------------------------------------
// HttpTranslator

HttpTranslator::HttpTranslator(std::string endpoint,
                               std::optional<std::string> auth_header)
    : HttpTranslator(std::move(endpoint), std::move(auth_header), Options{}) {}

HttpTranslator::HttpTranslator(std::string endpoint,
                               std::optional<std::string> auth_header,
                               Options options)
    : endpoint_(std::move(endpoint)), options_(options) {
  constexpr std::string_view kScheme = "http://";
  if (endpoint_.rfind(kScheme, 0) != 0) {
    throw TranslatorError("unsupported endpoint '" + endpoint_ +
                          "' (expected http://host[:port][/path])");
  }
  const std::string rest = endpoint_.substr(kScheme.size());
  const size_t slash = rest.find('/');
  const std::string authority = rest.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : rest.substr(slash);
  const size_t colon = authority.rfind(':');
  host_ = authority.substr(0, colon);
  if (colon != std::string::npos) {
    try {
      port_ = std::stoi(authority.substr(colon + 1));
    } catch (const std::exception&) {
      throw TranslatorError("bad port in endpoint '" + endpoint_ + "'");
    }
  }
  if (host_.empty()) throw TranslatorError("missing host in '" + endpoint_ + "'");
  if (auth_header) {
    const size_t sep = auth_header->find(':');
    if (sep == std::string::npos) {
      auth_name_ = "Authorization";
      auth_value_ = *auth_header;
    } else {
      auth_name_ = auth_header->substr(0, sep);
      auth_value_ = auth_header->substr(sep + 1);
      while (!auth_value_.empty() && auth_value_.front() == ' ') {
        auth_value_.erase(0, 1);
      }
    }
  }
  if (options_.max_batch == 0) options_.max_batch = 1;
}

std::vector<std::string> HttpTranslator::Post(
    std::span<const std::string> chunk) {
  nlohmann::json body = {{"texts", std::vector<std::string>(chunk.begin(), chunk.end())}};
  const std::string payload = body.dump();

  httplib::Client client(host_, port_);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
      options_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());
  httplib::Headers headers;
  if (!auth_name_.empty()) headers.emplace(auth_name_, auth_value_);

  std::string last_error;
  auto backoff = options_.initial_backoff;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    auto res = client.Post(path_, headers, payload, "application/json");
    if (!res) {
      last_error = "request failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw TranslatorError("translator endpoint returned HTTP " +
                            std::to_string(res->status));
    }
    nlohmann::json reply;
    try {
      reply = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception&) {
      throw TranslatorError("malformed response: body is not JSON");
    }
    auto it = reply.find("translations");
    if (!reply.is_object() || it == reply.end() || !it->is_array()) {
      throw TranslatorError("malformed response: no 'translations' array");
    }
    if (it->size() != chunk.size()) {
      throw TranslatorError("malformed response: " +
                            std::to_string(it->size()) + " translations for " +
                            std::to_string(chunk.size()) + " texts");
    }
    std::vector<std::string> out;
    out.reserve(chunk.size());
    for (const auto& t : *it) {
      if (!t.is_string()) {
        throw TranslatorError("malformed response: non-string translation");
      }
      out.push_back(t.get<std::string>());
    }
    return out;
  }
  throw TranslatorError("translator endpoint " + endpoint_ + " failed after " +
                        std::to_string(options_.max_retries) +
                        " retries: " + last_error);
}

std::vector<std::string> HttpTranslator::Translate(
    std::span<const std::string> batch) {
  std::vector<std::string> out;
  out.reserve(batch.size());
  for (size_t start = 0; start < batch.size(); start += options_.max_batch) {
    const size_t len = std::min(options_.max_batch, batch.size() - start);
    auto part = Post(batch.subspan(start, len));
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::unique_ptr<Translator> MakeTranslator(
    std::string_view spec, std::optional<std::string> auth_header) {
  if (spec == "identity") return std::make_unique<IdentityTranslator>();
  if (spec.starts_with("constant:")) {
    return std::make_unique<ConstantTranslator>(
        std::string(spec.substr(std::string_view("constant:").size())));
  }
  if (spec.starts_with("cmd:")) {
    const std::string command(spec.substr(4));
    if (command.empty()) throw std::invalid_argument("empty cmd: translator");
    return std::make_unique<SubprocessTranslator>(
        std::vector<std::string>{"/bin/sh", "-c", "exec " + command});
  }
  if (spec.starts_with("http:")) {
    // Accept both "http:http://host/path" and a bare "http://host/path".
    const std::string_view url =
        spec.starts_with("http://") ? spec : spec.substr(5);
    return std::make_unique<HttpTranslator>(std::string(url),
                                            std::move(auth_header));
  }
  throw std::invalid_argument("unknown translator spec '" + std::string(spec) +
                              "' (use identity, constant:<text>, cmd:<command> "
                              "or http:<url>)");
}

}  // namespace orthonoise
