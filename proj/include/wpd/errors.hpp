#pragma once

#include <stdexcept>
#include <string>

namespace wpd {

// Base of every error the library throws on bad input or violated hypotheses.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed polytope file or CLI argument. The message carries the line/field.
class InputError : public Error {
  public:
    using Error::Error;
};

// Unbounded input, non-simple vertex, empty polytope, ...
class GeometryError : public Error {
  public:
    using Error::Error;
};

// A lattice generating-function operation was called on a polytope that is
// not regular and integral.
class HypothesisError : public Error {
  public:
    using Error::Error;
};

// y = -1, zero denominators, evaluation at a pole.
class DomainError : public Error {
  public:
    using Error::Error;
};

} // namespace wpd
