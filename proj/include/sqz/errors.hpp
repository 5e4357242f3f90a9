#pragma once

#include <stdexcept>
#include <string>

namespace sqz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mixing values from different variable contexts.
struct ContextMismatch : Error {
  using Error::Error;
};

// exact_div: no polynomial quotient exists.
struct NotDivisible : Error {
  using Error::Error;
};

// substitute: a substitution made a denominator vanish.
struct DenominatorVanishes : Error {
  using Error::Error;
};

// Permutation size does not match the context.
struct SizeMismatch : Error {
  using Error::Error;
};

// Conjugation would move an entry to or below the diagonal.
struct NotUpperTriangular : Error {
  using Error::Error;
};

struct RankTooLarge : Error {
  using Error::Error;
};

struct NotBlockSupported : Error {
  using Error::Error;
};

// Word length does not match the orbit dimension.
struct DimensionMismatch : Error {
  using Error::Error;
};

// Block pipelines must not apply the reflection crossing the block boundary.
struct MiddleReflectionInBlockMode : Error {
  using Error::Error;
};

// Bad CLI input / flags.
struct UsageError : Error {
  using Error::Error;
};

struct ParseError : UsageError {
  using UsageError::UsageError;
};

}  // namespace sqz
