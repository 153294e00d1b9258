#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resolvent {

/// A parameter lies outside the domain an operation accepts.
class invalid_parameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input graph lacks a structural property (e.g. connectivity) the
/// operation requires.
class structural_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family has no published closed-form characteristic polynomial.
class unsupported_family : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `offset()` is the zero-based byte position of the
/// first offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace resolvent
