#pragma once

#include <stdexcept>
#include <string>

namespace weyldiag {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input failed: out-of-range letter,
/// non-reduced word, invalid rank, a vector that is not a root, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (a token that is not an integer, a bad grid pair).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive sweep was requested over more than 2^cap diagrams.
class SizeCapError : public Error {
 public:
  SizeCapError(int requested, int cap)
      : Error("sweep over words of length " + std::to_string(requested) +
              " exceeds the cap of " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  int requested() const noexcept { return requested_; }
  int cap() const noexcept { return cap_; }

 private:
  int requested_;
  int cap_;
};

}  // namespace weyldiag
