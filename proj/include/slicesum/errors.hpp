#pragma once

#include <stdexcept>
#include <string>

namespace slicesum {

// Bad arguments / preconditions (CLI exit code 2).
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or non-finite user data (CLI exit code 3).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Convergence or precision failures (CLI exit code 4).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slicesum
