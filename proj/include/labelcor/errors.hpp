#pragma once

#include <stdexcept>
#include <string>

namespace labelcor {

/// Raised for malformed or inconsistent input data (CLI exit code 2).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace labelcor
