#pragma once

#include <stdexcept>
#include <string>

namespace voakit {

// A computation needed data beyond the weight window it was given.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace voakit
