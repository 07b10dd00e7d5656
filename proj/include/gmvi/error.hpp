#pragma once

#include <stdexcept>
#include <string>

namespace gmvi {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (bad dimension, bad range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An inner numerical routine failed in a way that points at a bug rather
/// than at user input (bracket failure, optimality check violated, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidArgument(what);
}

}  // namespace gmvi
