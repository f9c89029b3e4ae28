#pragma once

#include <stdexcept>
#include <string>

namespace wog {

// Bad input or a violated precondition. The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured resource limit was hit (fiber size, enumeration count,
// Graver completion size, int64 overflow). The CLI maps this to exit code 2.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace wog
