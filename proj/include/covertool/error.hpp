#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace covertool {

enum class ErrorCode : int {
  invalid_argument = 1,
  parse = 2,
  size_limit = 3,
  overflow = 4,
  internal = 5,
};

// Base of every exception thrown by the library. The C API maps `code()` onto
// its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::invalid_argument, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(ErrorCode::parse,
              line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised when an exhaustive computation would exceed one of the fixed caps.
// `bound` names the cap that triggered ("n<=24", "subsets<=2^22", ...).
class SizeError : public Error {
 public:
  SizeError(const std::string& what, std::string bound)
      : Error(ErrorCode::size_limit, what), bound_(std::move(bound)) {}

  const std::string& bound() const noexcept { return bound_; }

 private:
  std::string bound_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error(ErrorCode::overflow, what) {}
};

}  // namespace covertool
