#pragma once

#include <stdexcept>
#include <string>

namespace hvkit {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects (points, vectors, layers) disagree on dimension.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// A point violates its invariants (fewer than two coordinates, NaN/Inf).
class InvalidPointError : public Error {
 public:
  using Error::Error;
};

/// A solution set contains two coordinate-wise identical points.
class DuplicatePointError : public Error {
 public:
  using Error::Error;
};

/// A solution set contains a dominated point.
class DominatedPairError : public Error {
 public:
  using Error::Error;
};

/// The reference point is not strictly dominated by every set member.
class ReferencePointError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its documented domain.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A dataset or model file is malformed or inconsistent.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Training produced a non-finite loss and was aborted.
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace hvkit
