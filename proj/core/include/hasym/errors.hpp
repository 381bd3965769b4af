#pragma once

#include <stdexcept>
#include <string>

namespace hasym {

// Precondition violated by an argument (a0 != 0 where a0 = 0 is required,
// x <= 1 on the Lambert branch, h0 <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Query outside the range covered by a trajectory or dense representation.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The ODE integrator could not continue (step collapse, positivity lost,
// step budget exhausted).
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iteration (fixed point, Newton, bracketing) hit its cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical result cannot be certified at the requested accuracy: tail
// series not converged, fit spread too large, or integrator error above the
// remainder scale it is supposed to resolve.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hasym
