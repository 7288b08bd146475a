#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

// Precondition violations on caller-supplied data.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive method was asked to enumerate beyond its guard.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The random instance generator gave up after its retry budget.
class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fusion

namespace fusion {

// The two-color search found no proper 2-coloring of the forbidden union.
class NoTwoColoring : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fusion
