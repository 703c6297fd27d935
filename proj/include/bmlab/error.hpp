#ifndef BMLAB_ERROR_HPP
#define BMLAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bmlab {

/// Base class for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bmlab

#endif  // BMLAB_ERROR_HPP
