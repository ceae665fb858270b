// Copyright 2026 The ltltest Authors
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

#include "subprocess.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <mutex>

namespace ltltest {

namespace {

// Writes to a dead child must surface as EPIPE, not kill the process.
void ignore_sigpipe_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { ::signal(SIGPIPE, SIG_IGN); });
}

}  // namespace

SubprocessSession::SubprocessSession(std::string command,
                                     std::vector<std::string> input_names,
                                     std::vector<std::string> output_names,
                                     double timeout_secs)
    : input_names_(std::move(input_names)),
      output_names_(std::move(output_names)),
      timeout_secs_(timeout_secs) {
  ignore_sigpipe_once();

  int to_child[2], from_child[2];
  if (::pipe(to_child) != 0) throw SutError("pipe failed");
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw SutError("pipe failed");
  }

  pid_ = ::fork();
  if (pid_ < 0) {
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]})
      ::close(fd);
    throw SutError("fork failed");
  }
  if (pid_ == 0) {
    // Own process group, so teardown can reach the whole command tree.
    ::setpgid(0, 0);
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]})
      ::close(fd);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), nullptr);
    ::_exit(127);
  }
  ::setpgid(pid_, pid_);  // also from the parent; whichever runs first wins
  ::close(to_child[0]);
  ::close(from_child[1]);
  to_child_ = to_child[1];
  from_child_ = from_child[0];
}

SubprocessSession::~SubprocessSession() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ > 0) {
    // Give the command a moment to exit on closed stdin, then take down
    // its whole process group; a shell wrapper may not have exec'ed, and
    // stray grandchildren would keep inherited pipes open.
    int status = 0;
    bool reaped = false;
    for (int i = 0; i < 50; ++i) {
      pid_t r = ::waitpid(pid_, &status, WNOHANG);
      if (r == pid_ || (r < 0 && errno != EINTR)) {
        reaped = true;
        break;
      }
      ::usleep(2000);
    }
    ::kill(-pid_, SIGKILL);
    if (!reaped) ::waitpid(pid_, &status, 0);
  }
}

void SubprocessSession::send_line(const std::string& line) {
  std::string data = line + "\n";
  std::size_t written = 0;
  while (written < data.size()) {
    ssize_t n = ::write(to_child_, data.data() + written,
                        data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw SutError("write to SUT failed: " + std::string(strerror(errno)));
    }
    written += static_cast<std::size_t>(n);
  }
}

std::string SubprocessSession::read_line() {
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration<double>(timeout_secs_);
  while (true) {
    std::size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return line;
    }
    auto remaining = deadline - std::chrono::steady_clock::now();
    int ms = static_cast<int>(
        std::chrono::duration_cast<std::chrono::milliseconds>(remaining)
            .count());
    if (ms <= 0) throw SutError("SUT reply timed out");
    struct pollfd pfd{from_child_, POLLIN, 0};
    int rc = ::poll(&pfd, 1, ms);
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw SutError("poll failed: " + std::string(strerror(errno)));
    }
    if (rc == 0) throw SutError("SUT reply timed out");
    char chunk[4096];
    ssize_t n = ::read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw SutError("read from SUT failed: " + std::string(strerror(errno)));
    }
    if (n == 0) throw SutError("SUT process closed its output");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

void SubprocessSession::reset() {
  send_line("RESET");
  std::string reply = read_line();
  if (reply != "OK")
    throw SutError("protocol violation: expected 'OK', got '" + reply + "'");
}

Assignment SubprocessSession::step(const Assignment& input) {
  if (input.size() != input_names_.size())
    throw SutError("input assignment has wrong arity");
  std::string line = "STEP";
  for (std::size_t i = 0; i < input_names_.size(); ++i) {
    line += ' ';
    line += input_names_[i];
    line += input.get(static_cast<VarId>(i)) ? "=1" : "=0";
  }
  send_line(line);

  std::string reply = read_line();
  // Byte-exact reply check: every output, declaration order, single spaces.
  Assignment output(output_names_.size(), false);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < output_names_.size(); ++i) {
    std::string expect = output_names_[i] + "=";
    if (i > 0) {
      if (pos >= reply.size() || reply[pos] != ' ')
        throw SutError("protocol violation in reply '" + reply + "'");
      ++pos;
    }
    if (reply.compare(pos, expect.size(), expect) != 0)
      throw SutError("protocol violation in reply '" + reply + "'");
    pos += expect.size();
    if (pos >= reply.size() || (reply[pos] != '0' && reply[pos] != '1'))
      throw SutError("protocol violation in reply '" + reply + "'");
    output.set(static_cast<VarId>(i), reply[pos] == '1');
    ++pos;
  }
  if (pos != reply.size())
    throw SutError("protocol violation in reply '" + reply + "'");
  return output;
}

}  // namespace ltltest
