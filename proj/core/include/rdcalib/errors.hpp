#pragma once

#include <stdexcept>
#include <string>

namespace rdcalib {

// Component value outside its physical domain (non-positive R, L or C).
class InvalidComponentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bilinear transform produced a degenerate discrete system (pole pinned at
// z = -1 or an empty constant denominator).
class DegenerateMappingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Partial fraction expansion requires simple poles.
class RepeatedPoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least-squares operator is (numerically) rank deficient; callers fall back
// to the regularized branch.
class DeficientRankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent run configuration. Mapped to exit code 2 by the CLI.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rdcalib
