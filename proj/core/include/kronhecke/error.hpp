#pragma once

#include <stdexcept>
#include <string>

namespace kronhecke {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group, subgroup or action fails its defining axioms or preconditions.
class GroupError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (order, orbit space) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed text in one of the exchange formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by theory did not. Always an implementation bug
/// or corrupted input data.
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace kronhecke
