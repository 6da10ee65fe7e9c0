#pragma once

#include <stdexcept>
#include <string>

namespace ifam {

// Input text does not conform to the family file format.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A mathematical hypothesis the input was required to satisfy does not hold.
// The request itself was well-formed; the check ran and came out negative.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance exceeds a hard enumeration or memory cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters outside the supported range for a construction.
class UnsupportedParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ifam
