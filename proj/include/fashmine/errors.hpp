#pragma once

#include <stdexcept>
#include <string>

namespace fashmine {

// Malformed or inconsistent input data (files, records, ids). CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric breakdown (degenerate vectors, NaN loss, non-monotone likelihood).
// CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fashmine
