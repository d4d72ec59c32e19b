// Exception hierarchy shared by every tanglekit module.

#ifndef TANGLEKIT_ERRORS_HPP_
#define TANGLEKIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tanglekit {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A checked 64-bit operation left the representable range.
  class OverflowError : public Error {
   public:
    using Error::Error;
  };

  // (0, 0) is not a point of the projective line.
  class BothZeroError : public Error {
   public:
    BothZeroError() : Error("(0, 0) does not represent a projective rational") {}
  };

  class InfinityHasNoCFError : public Error {
   public:
    InfinityHasNoCFError()
        : Error("the point at infinity has no continued fraction") {}
  };

  // Raised only when an internal invariant is broken, i.e. a bug.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  class LimitTooLargeError : public Error {
   public:
    using Error::Error;
  };

  class IoError : public Error {
   public:
    using Error::Error;
  };

  // Syntax error in a tangle, braid or fraction expression. token_index is
  // 1-based; 0 refers to the input as a whole.
  class ParseError : public Error {
   public:
    ParseError(std::size_t token_index, std::string const& reason)
        : Error("token " + std::to_string(token_index) + ": " + reason),
          _token_index(token_index),
          _reason(reason) {}

    [[nodiscard]] std::size_t token_index() const noexcept {
      return _token_index;
    }
    [[nodiscard]] std::string const& reason() const noexcept {
      return _reason;
    }

   private:
    std::size_t _token_index;
    std::string _reason;
  };

}  // namespace tanglekit

#endif  // TANGLEKIT_ERRORS_HPP_
