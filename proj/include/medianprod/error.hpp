#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace medianprod {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what, const std::string& source = {})
      : Error((source.empty() ? "" : source + ": ") +
              (line == 0 ? what : "line " + std::to_string(line) + ": " + what)),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace medianprod
