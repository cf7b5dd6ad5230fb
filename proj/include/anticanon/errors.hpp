#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace anticanon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that violates its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computed result failed its own certification; signals an input that
/// cannot come from an actual surface, or a broken internal invariant.
class CertificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics)
      : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  static std::string join(const std::vector<std::string>& d) {
    std::string out = "invalid configuration";
    for (const auto& s : d) out += "\n  " + s;
    return out;
  }
  std::vector<std::string> diagnostics_;
};

}  // namespace anticanon
