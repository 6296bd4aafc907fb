#pragma once

#include <functional>

namespace cdual {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  long evaluations = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod (7/15) integration with a shared evaluation
// budget. Subintervals are summed in left-to-right order by pairwise
// summation, so results do not depend on the refinement history.
class AdaptiveIntegrator {
 public:
  explicit AdaptiveIntegrator(long budget = 1'000'000) : budget_(budget) {}

  QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double abs_tol);

  // Iterated integral over [0,1]^2 of f(x, y), inner in x.
  QuadratureResult integrate_unit_square(const std::function<double(double, double)>& f, double abs_tol);

  long used() const { return used_; }
  long budget() const { return budget_; }
  bool exhausted() const { return used_ >= budget_; }

 private:
  long budget_;
  long used_ = 0;
};

}  // namespace cdual
