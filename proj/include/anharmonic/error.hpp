#pragma once

#include <stdexcept>
#include <string>

namespace anharmonic {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Series on different exponent lattices (or in different coupling variables)
// were combined.
class LatticeMismatch : public Error {
public:
  using Error::Error;
};

// Coupling sign does not match the instanton / resonance regime of the
// oscillator (even: g < 0, odd: g > 0).
class RegimeError : public Error {
public:
  using Error::Error;
};

class FixtureError : public Error {
public:
  using Error::Error;
};

class ConvergenceError : public Error {
public:
  using Error::Error;
};

// The interpolated level polynomial failed at the verification level.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace anharmonic
