#pragma once

#include <stdexcept>
#include <string>

namespace photongas {

/// Thrown when an iterative scheme (bisection, series tail, ...) fails to
/// reach its target accuracy within its iteration budget.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace photongas
