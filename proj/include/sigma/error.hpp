#pragma once

#include <stdexcept>
#include <string>

namespace sigma {

// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction would exceed a configured size limit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t reached)
      : Error(what), reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

}  // namespace sigma
