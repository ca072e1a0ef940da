#pragma once

#include <stdexcept>
#include <string>

namespace multicoh {

/// Base class for all precondition violations raised by the library.
/// Checkers never throw; they collect violations into a Report instead.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct UnknownSignature : Error {
  using Error::Error;
};

struct EndpointError : Error {
  using Error::Error;
};

struct BoundaryMismatch : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct ArityBoundMismatch : Error {
  using Error::Error;
};

struct NotCommutative : Error {
  using Error::Error;
};

struct InvalidSetMulticat : Error {
  using Error::Error;
};

struct InvalidPseudo : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct SchemaError : Error {
  using Error::Error;
};

struct DanglingReference : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

}  // namespace multicoh
