#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antisym {

/// A computation would exceed a configured size budget (embedding bit
/// budget, enumeration cap, separation index ceiling).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression or literal. `position` is a byte offset into the
/// input text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace antisym
