#pragma once

#include <stdexcept>
#include <string>

namespace semigen {

// Base for all library-domain failures; CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroConstantTerm : Error {
  using Error::Error;
};
struct NonVanishingConstant : Error {
  using Error::Error;
};
struct BadRadius : Error {
  using Error::Error;
};
struct BadParams : Error {
  using Error::Error;
};
struct BadWeights : Error {
  using Error::Error;
};
struct BadNormalization : Error {
  using Error::Error;
};
struct BadRange : Error {
  using Error::Error;
};
struct OutOfStatedRange : Error {
  using Error::Error;
};
struct NoRootInRange : Error {
  using Error::Error;
};
struct ArgUndefined : Error {
  using Error::Error;
};
struct DegenerateDenominator : Error {
  using Error::Error;
};
struct EscapedDisk : Error {
  using Error::Error;
};
struct StepUnderflow : Error {
  using Error::Error;
};

}  // namespace semigen
