#pragma once

#include <stdexcept>
#include <string>

namespace gcx {

enum class ErrorKind {
  InvalidEdge,
  SelfLoop,
  VertexOutOfRange,
  EmptyGraph,
  Disconnected,
  TooSmall,
  TooLarge,
  NotATree,
  BadParameter,
  TruncatedRecord,
  InvalidByte,
  InvalidPadding,
  UnknownTask,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace gcx
