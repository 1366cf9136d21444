#pragma once

#include <stdexcept>
#include <string>

namespace msplit {

// Base class for all library errors. The CLI maps any Error to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
  explicit NotPrime(int p) : Error("modulus " + std::to_string(p) + " is not prime") {}
};

struct ZeroInverse : Error {
  ZeroInverse() : Error("zero has no multiplicative inverse") {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SizeCapExceeded : Error {
  using Error::Error;
};

struct LoopPresent : Error {
  explicit LoopPresent(const std::string& label)
      : Error("loop at element '" + label + "' (zero column)") {}
};

struct ColoopPresent : Error {
  explicit ColoopPresent(const std::string& label)
      : Error("coloop at element '" + label + "'") {}
};

struct LabelCollision : Error {
  explicit LabelCollision(const std::string& label)
      : Error("duplicate ground label '" + label + "'") {}
};

struct ForeignSubset : Error {
  ForeignSubset() : Error("subset does not belong to this ground set") {}
};

struct NotACircuit : Error {
  using Error::Error;
};

struct EmptySplitSet : Error {
  EmptySplitSet() : Error("split set T must be nonempty") {}
};

struct FullSplitSet : Error {
  FullSplitSet() : Error("split set T must be a proper subset of the ground set") {}
};

struct NoNptCircuit : Error {
  NoNptCircuit() : Error("basis characterization requires an NPT circuit (non-trivial split)") {}
};

struct NotEulerian : Error {
  NotEulerian() : Error("matroid has no decomposition into disjoint circuits") {}
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

}  // namespace msplit
