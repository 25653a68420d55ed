#pragma once

#include <stdexcept>
#include <string>

namespace gammahodge {

// Malformed or out-of-contract input supplied by the caller.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource limit (word enumeration cap, configuration size)
// would be exceeded. Never a silent truncation.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An identity the library checks internally did not hold.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Numerical integration did not reach its tolerance.
class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace gammahodge
