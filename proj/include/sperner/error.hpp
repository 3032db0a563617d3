#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sperner {

// Malformed or inadmissible input (wrong dimensions, bad indices, a labeling
// that fails the discipline an operation requires).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that could not be parsed: rationals, expressions, instance files.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A result contradicting a proven theorem. Always an implementation bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sperner
