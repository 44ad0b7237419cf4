#pragma once

#include <stdexcept>
#include <string>

namespace ringpoints {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's domain (zero modulus, dimension
/// mismatch, repeated points where distinct ones are required, ...).
class invalid_input : public error {
public:
  using error::error;
};

/// The operation is well-formed but undefined for these parameters,
/// e.g. omega(p) for p = 3 (mod 4).
class not_applicable : public error {
public:
  using error::error;
};

/// A simplex whose squared volume vanishes.
class degenerate : public error {
public:
  using error::error;
};

/// Graph or table would exceed the configured memory budget.
class resource_limit : public error {
public:
  using error::error;
};

} // namespace ringpoints
