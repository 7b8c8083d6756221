#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raney {

enum class ErrorCode {
  parse_error,
  not_a_partial_order,
  not_a_lattice,
  no_bounded_element,
  size_limit,
  cap_exceeded,
  precondition,
  not_dualizing,
  not_automorphism,
  not_completely_distributive,
  not_down_closed,
  malformed_family,
  invariant_violated,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an exhaustive enumeration or search exceeds its cap.
/// `partial()` is the amount of work (or results) completed before stopping.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t partial)
      : Error(ErrorCode::cap_exceeded,
              what + " exceeded cap " + std::to_string(cap) + " (partial count " +
                  std::to_string(partial) + ")"),
        cap_(cap),
        partial_(partial) {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

}  // namespace raney
