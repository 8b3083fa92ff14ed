#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace a1deg {

/// A computation refused because an input violates a mathematical
/// precondition (degenerate form, non-isolated zero, common factor, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `position` is a byte offset into the text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace a1deg
