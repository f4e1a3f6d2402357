#pragma once

#include <stdexcept>
#include <string>

namespace hexstation {

// Invalid arguments or out-of-range values supplied by a caller.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (JSON, CSV, GeoJSON).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inconsistent or unusable configuration (bad enum, dim mismatch, missing vocab).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dataset does not meet the preconditions of an operation (too few positives, ...).
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem or network failure.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hexstation
