#pragma once

#include <stdexcept>
#include <string>

namespace holovec {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two operands live in spaces of different dimension (or length).
struct DimensionMismatch : Error {
  using Error::Error;
};

// An inverse was requested for an element that has none.
// For HRR tuples, `index` is the Fourier component of smallest magnitude
// and `magnitude` its absolute value; for GA vectors both are unused.
struct NotInvertible : Error {
  int index = -1;
  double magnitude = 0.0;
  explicit NotInvertible(const std::string& what) : Error(what) {}
  NotInvertible(const std::string& what, int idx, double mag)
      : Error(what), index(idx), magnitude(mag) {}
};

// A request exceeds the number of distinct items a space can hold.
struct CapacityError : Error {
  using Error::Error;
};

// Malformed textual input (bit strings, JSON payloads, CLI literals).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace holovec
