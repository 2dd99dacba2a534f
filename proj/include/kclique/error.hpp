#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kclique {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge list, circuit dump or profile document.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Grover planning was asked for an instance with no known solution.
class NoSolutionsError : public Error {
 public:
  NoSolutionsError()
      : Error("no solutions known (m = 0); iteration count is undefined") {}
};

}  // namespace kclique
