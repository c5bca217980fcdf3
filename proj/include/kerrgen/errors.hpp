#pragma once

#include <stdexcept>
#include <string>

namespace kerrgen {

// Requested truncation cannot reach the configured tail tolerance.
struct CutoffTooSmallError : std::runtime_error {
  explicit CutoffTooSmallError(const std::string& what) : std::runtime_error(what) {}
};

// Raising a mode above its Fock cutoff.
struct CutoffOverflowError : std::runtime_error {
  explicit CutoffOverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Outcome labels by total photon number require equal per-mode phase shifts.
struct AmbiguousOutcomeLabelingError : std::runtime_error {
  explicit AmbiguousOutcomeLabelingError(const std::string& what) : std::runtime_error(what) {}
};

// Pointer means coincide or are non-monotonic; midpoint thresholds undefined.
struct DegenerateReadoutError : std::runtime_error {
  explicit DegenerateReadoutError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct GridTooLargeError : std::runtime_error {
  explicit GridTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kerrgen
