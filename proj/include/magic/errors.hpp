#pragma once

#include <stdexcept>
#include <string>

namespace magic {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad graph, bad labeling, violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A search exceeded its configured node or edge budget. The answer is
// unknown, never wrong.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Randomized generation gave up after its retry budget.
class GenerationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace magic
