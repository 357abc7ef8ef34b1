#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace wvqkd {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible matrix/vector shapes, or a dimension that does not factor
/// as requested.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Post-selection probability numerically zero; the weak value is singular.
class OrthogonalPostselectionError : public Error {
 public:
  using Error::Error;
};

/// A density matrix violated Hermiticity, unit trace, or positivity beyond
/// its stated tolerance.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A probability table with negative entries or a non-unit sum.
class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical routine failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Pointer grid too coarse for the requested reconstruction.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

namespace detail {
std::atomic<std::uint64_t>& warning_counter();
}

/// Emits a non-fatal diagnostic to stderr and bumps the warning counter.
void warn(const std::string& message);

/// Number of warnings emitted so far in this process.
std::uint64_t warning_count();

}  // namespace wvqkd
