#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planar_turan {

// Precondition violated by the caller (bad vertex, bad size, bad flag).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (h,k) outside the parameter range the extremal bounds cover.
class UnsupportedRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Random instance generation could not meet its degree constraints.
class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace planar_turan
