#include "line_process.hpp"

#include <csignal>
#include <cstring>
#include <stdexcept>
#include <utility>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

namespace dialeval::detail {

namespace {

// A dead child must surface as an error from exchange(), not kill the host.
void ignore_sigpipe_once() {
  static const bool done = [] {
    std::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)done;
}

}  // namespace

LineProcess::LineProcess(std::string command,
                         std::map<std::string, std::string> env)
    : command_(std::move(command)), env_(std::move(env)) {}

LineProcess::~LineProcess() { close_all(); }

void LineProcess::close_all() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  to_child_ = from_child_ = -1;
  if (pid_ > 0) {
    int status = 0;
    ::waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

void LineProcess::start() {
  ignore_sigpipe_once();
  int in_pipe[2];   // parent -> child
  int out_pipe[2];  // child -> parent
  if (::pipe(in_pipe) != 0) throw std::runtime_error("pipe() failed");
  if (::pipe(out_pipe) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw std::runtime_error("pipe() failed");
  }
  pid_ = ::fork();
  if (pid_ < 0) throw std::runtime_error("fork() failed");
  if (pid_ == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::close(out_pipe[1]);
    for (const auto& [key, value] : env_)
      ::setenv(key.c_str(), value.c_str(), 1);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), nullptr);
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
}

std::string LineProcess::exchange(std::string_view line) {
  if (pid_ <= 0) throw std::runtime_error("process not started");
  std::string payload(line);
  for (char& c : payload)
    if (c == '\n' || c == '\r') c = ' ';
  payload.push_back('\n');
  std::size_t off = 0;
  while (off < payload.size()) {
    const ssize_t n = ::write(to_child_, payload.data() + off, payload.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::runtime_error("write to subprocess failed: " +
                               std::string(std::strerror(errno)));
    }
    off += static_cast<std::size_t>(n);
  }
  while (true) {
    const std::size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string out = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!out.empty() && out.back() == '\r') out.pop_back();
      return out;
    }
    char chunk[4096];
    const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::runtime_error("read from subprocess failed: " +
                               std::string(std::strerror(errno)));
    }
    if (n == 0)
      throw std::runtime_error("subprocess closed its output stream");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

}  // namespace dialeval::detail
