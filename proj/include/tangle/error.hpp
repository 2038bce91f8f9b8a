#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tangle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tanglegram literal. `position()` is the byte offset of the
/// offending character in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that does not describe a valid tree or tanglegram
/// (duplicate labels, unmatched labels, size mismatch).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input is larger than the configured exact-search bound.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& operation, std::size_t size, std::size_t bound)
      : Error(operation + ": size " + std::to_string(size) + " exceeds bound " +
              std::to_string(bound)),
        size_(size),
        bound_(bound) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t size_;
  std::size_t bound_;
};

/// A mathematical invariant the algorithms rely on was found broken. Never
/// expected on valid input; reported instead of silently falling back.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tangle
