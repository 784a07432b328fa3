#pragma once

#include <stdexcept>
#include <string>

namespace qfrieze {

// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact quotient does not exist in the ring being divided in.
struct NotDivisible : Error {
  using Error::Error;
};

struct RankMismatch : Error {
  using Error::Error;
};

struct OddRank : Error {
  using Error::Error;
};

struct InvalidRank : Error {
  using Error::Error;
};

struct DirectionOutOfRange : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct NotQuasiCommuting : Error {
  using Error::Error;
};

// Input values do not satisfy a relation they are required to satisfy
// (non skew-symmetric matrix, frieze values breaking the unimodular rule).
struct InconsistentInput : Error {
  using Error::Error;
};

// Validates the rank used by every quantum construction: even and >= 2.
inline void require_even_rank(int n) {
  if (n < 2) {
    throw InvalidRank("rank must be at least 2, got " + std::to_string(n));
  }
  if (n % 2 != 0) {
    throw OddRank("n must be even, got " + std::to_string(n));
  }
}

}  // namespace qfrieze
