#pragma once

#include <stdexcept>
#include <string>

namespace szlab {

enum class ErrorKind {
  Loop,
  ParallelEdge,
  Disconnected,
  NoCycle,
  NotUnicyclic,
  TooLarge,
  EdgeNotFound,
  BadParams,
  InvalidSpec,
  PreconditionViolated,
  IndexOutOfRange,
  EmptyClass,
  IoError,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

// All module errors carry a machine-readable kind plus a message that names
// the offending element (vertex, edge, parameter, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace szlab
