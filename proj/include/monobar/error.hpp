#pragma once

#include <stdexcept>
#include <string>

namespace monobar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad relation, violated precondition, unparsable file.
class InputError : public Error {
public:
  using Error::Error;
};

/// A work limit (basis size, matrix size, memo table) was exceeded.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Shapes of consecutive differentials do not fit together.
class StructuralError : public Error {
public:
  using Error::Error;
};

/// Something that should be impossible for a valid complex happened.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace monobar
