#pragma once

#include <stdexcept>
#include <string>

namespace avcap {

// Bad or inconsistent configuration: unknown keys, unsupported axis
// combinations, unresolvable paths. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dataset validation failures: malformed files, dimension mismatches,
// missing captions. CLI exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric contract violations at runtime: shape mismatches, non-finite
// values, non-scalar backward roots. CLI exit code 4.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace avcap
