#pragma once

#include <stdexcept>
#include <string>

namespace wavent {

/// Bad argument to a public operation (unknown id, out-of-range parameter,
/// zero scale, invalid Renyi order, too many pyramid levels...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A sampling grid does not cover the effective support it is asked to
/// represent, or a transform cannot reach the requested resolution.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A density or filter failed its unit-mass / unit-energy contract.
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem or parse failure at the I/O boundary.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wavent
