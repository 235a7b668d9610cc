#ifndef MATPART_ERRORS_HPP
#define MATPART_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matpart {

class MatroidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A desk-scale limit (ground-set size, bitmask width) was exceeded.
class CapacityError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

/// A caller-side precondition does not hold.
class PreconditionError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

/// Malformed construction input (crossing laminar sets, bad indices, ...).
class ValidationError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

/// An independence oracle was misused or failed.
class OracleError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

/// A self-check on an algorithm's output failed. Always a bug.
class InternalError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

}  // namespace matpart

#endif  // MATPART_ERRORS_HPP
