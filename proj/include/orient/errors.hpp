#pragma once

#include <stdexcept>
#include <string>

namespace orient {

// Malformed input files or encodings. CLI exit code 2.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Arguments outside a documented range (n out of range, bad vertex id, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap was hit (enumeration size, search budget). CLI exit code 3.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation was violated by the caller.
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace orient
