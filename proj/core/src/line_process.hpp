#pragma once

// Bidirectional line-protocol child process: write one line, read one line.
// Used by the external sentiment provider and the external encoder adapter.

#include <map>
#include <string>
#include <string_view>

#include <sys/types.h>

namespace dialeval::detail {

class LineProcess {
 public:
  LineProcess(std::string command, std::map<std::string, std::string> env);
  ~LineProcess();
  LineProcess(const LineProcess&) = delete;
  LineProcess& operator=(const LineProcess&) = delete;

  // Starts the child under /bin/sh -c. Throws std::runtime_error on failure.
  void start();
  bool running() const { return pid_ > 0; }

  // Sends `line` (embedded newlines replaced by spaces) and returns the
  // child's next output line, without the trailing newline. Throws
  // std::runtime_error when the child is gone or misbehaves.
  std::string exchange(std::string_view line);

  const std::string& command() const { return command_; }

 private:
  void close_all();
  std::string command_;
  std::map<std::string, std::string> env_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

}  // namespace dialeval::detail
