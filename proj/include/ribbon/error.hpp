#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

// Malformed or out-of-contract input (CLI exit code 1).
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A numerical certification loop ran out of budget (CLI exit code 2).
class CertificationError : public std::runtime_error {
 public:
  explicit CertificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ribbon
