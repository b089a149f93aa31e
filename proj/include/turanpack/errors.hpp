#pragma once

#include <stdexcept>
#include <string>

namespace turanpack {

// Input or parameter outside an operation's domain. CLI exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 / edge-list input.
class ParseError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Integer arithmetic left the 64-bit range.
class OverflowError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An exact search refused to run because the instance exceeds the configured
// size guard. CLI exit code 3.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result failed its own verifier, or a guaranteed outcome did not
// materialize. Should never fire. CLI exit code 4.
class SoundnessAlarm : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace turanpack
