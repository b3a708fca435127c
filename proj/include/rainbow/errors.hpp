#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Bad user input or violated precondition. The CLI maps this to exit code 1.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap (walk count, matrix dimension, ...) was exceeded.
// The CLI maps this to exit code 2.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow
