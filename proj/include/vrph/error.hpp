#pragma once

#include <stdexcept>
#include <string>

namespace vrph {

/// Bad user input: malformed files, out-of-range parameters, dimension mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that would exceed the configured memory or simplex budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure, e.g. an eigensolver that did not converge.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant (a face missing from a filtration and the like).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vrph
