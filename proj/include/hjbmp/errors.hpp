#pragma once

#include <stdexcept>
#include <string>

namespace hjbmp {

// An eigen/linear-algebra routine failed to converge or produced garbage.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A Riccati trajectory left the set of finite matrices (indefinite flows can
// blow up in finite time outside the invariant interval).
class FiniteEscapeError : public std::runtime_error {
 public:
  FiniteEscapeError(const std::string& msg, double escape_time_estimate,
                    long step_index)
      : std::runtime_error(msg),
        escape_time_estimate(escape_time_estimate),
        step_index(step_index) {}

  double escape_time_estimate;
  long step_index;
};

// The quadratic basis exceeded the configured cap.
class BasisLimitError : public std::runtime_error {
 public:
  BasisLimitError(const std::string& msg, std::size_t basis_size)
      : std::runtime_error(msg), basis_size(basis_size) {}

  std::size_t basis_size;
};

// The instance cannot support the solver at all (e.g. every disturbance
// matrix is zero, so the derived scalars are undefined).
class DegenerateInstanceError : public std::runtime_error {
 public:
  explicit DegenerateInstanceError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// A structural requirement on the instance is violated (e.g. a state-cost
// matrix that is not positive definite).
class AssumptionError : public std::runtime_error {
 public:
  AssumptionError(const std::string& msg, int mode_index)
      : std::runtime_error(msg), mode_index(mode_index) {}

  int mode_index;
};

// Malformed input file; carries enough context to locate the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, const std::string& detail)
      : std::runtime_error(path + ": " + detail), path(path), detail(detail) {}

  std::string path;
  std::string detail;
};

}  // namespace hjbmp
