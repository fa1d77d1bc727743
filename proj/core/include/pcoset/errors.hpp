#pragma once

#include <stdexcept>
#include <string>

namespace pcoset {

/// Malformed user input: bad prime, unparsable literal, wrong schema.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class Singular : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// det Omega(kappa, tau) = 0: the boundary system cannot be solved for (x+, y+).
class SingularBoundary : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A finite-level Weil/Heisenberg operator was requested outside the window
/// where it is well defined on p^{-N}O / p^N O.
class WindowViolation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Two independent computations of the same object disagreed.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class SamplerFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcoset
