#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semreg {

/// Enumeration budget exhausted. Carries the number of items that were
/// produced before the cap was hit, so callers can fall back to sampled
/// (advisory) results.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, std::uint64_t reached)
      : std::runtime_error(what), reached_(reached) {}

  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

/// Instance exceeds a configured desk-scale limit (generator count,
/// lcm-lattice size, residue encoding range).
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal postcondition failed. Signals a bug or an invalid input
/// that slipped past validation; never raised on well-formed data.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace semreg
