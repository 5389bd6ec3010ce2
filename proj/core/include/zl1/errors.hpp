#pragma once

#include <stdexcept>
#include <string>

namespace zl1 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A multiplication table failed the group axioms. Carries a human-readable
// witness (offending triple or element).
struct NotAGroup : Error {
  using Error::Error;
};

// A construction would exceed the configured catalogue bound.
struct OrderBound : Error {
  using Error::Error;
};

struct NotPrime : Error {
  using Error::Error;
};

struct NotPrimePower : Error {
  using Error::Error;
};

// Two elements that must live on the same group do not.
struct GroupMismatch : Error {
  using Error::Error;
};

struct NotAProduct : Error {
  using Error::Error;
};

// A self-check that must hold mathematically (orthogonality, idempotent
// resolution, ...) failed. Always indicates a bug; never silently ignored.
struct InternalInconsistency : Error {
  using Error::Error;
};

// A certified decision could not be resolved within the refinement cap or
// the declared certificates.
struct UndeterminedError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace zl1
