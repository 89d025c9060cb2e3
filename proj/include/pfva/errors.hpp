// Exception types thrown by the pfva library.
#pragma once

#include <stdexcept>
#include <string>

namespace pfva {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A parameter hit a pole of the transmission algebra (rho = -1).
struct SingularParameterError : Error {
  using Error::Error;
};

/// Negative inertia, non-positive length, bad limits, and similar.
struct DomainError : Error {
  using Error::Error;
};

/// Slider coordinate outside the reachable stroke [l - r, l + r].
struct OutOfStrokeError : Error {
  using Error::Error;
};

/// First-order KIC vanishes; slider rates cannot be pulled back to the crank.
struct DeadCenterError : Error {
  using Error::Error;
};

/// Allocation policy needs a reduction that is zero.
struct DegeneratePolicyError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace pfva
