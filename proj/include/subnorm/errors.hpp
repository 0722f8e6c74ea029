#pragma once

#include <stdexcept>

namespace subnorm {

// Argument outside the mathematical domain of an operation (x outside [0,1],
// u below s(1), NaN inputs).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Family or construction parameter outside its declared range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// normalize() on a generator with s(1) = 0.
class NormalizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A generator rule violated one of the sampled generator invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed operator spec, tolerance override or record.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingFixtureError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace subnorm
