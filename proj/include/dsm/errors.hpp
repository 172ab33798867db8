#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dsm {

// Exit classification used by the command line tool: 2 = invalid input,
// 3 = mathematical inconsistency detected by a cross-check, 4 = I/O.
enum class ErrorKind { Validation = 2, Inconsistency = 3, Io = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail_validation(const std::string& code, const std::string& what) {
  throw Error(ErrorKind::Validation, code, what);
}

[[noreturn]] inline void fail_inconsistency(const std::string& code, const std::string& what) {
  throw Error(ErrorKind::Inconsistency, code, what);
}

[[noreturn]] inline void fail_io(const std::string& what) {
  throw Error(ErrorKind::Io, "Io", what);
}

}  // namespace dsm
