#pragma once

#include <functional>

#include "wells/well.hpp"

namespace wells {

/// Adaptive composite Simpson integration of f over [lo, hi] to the
/// given absolute tolerance. Throws NumericError on NaN values or
/// failure to converge. Returns 0 for an empty interval.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = 1e-10);

/// Fixed composite Simpson rule with n subintervals (rounded up to
/// even). Used as the grid-based route and as an independent check on
/// the adaptive one.
double integrate_simpson(const std::function<double(double)>& f, double lo,
                         double hi, int n);

}  // namespace wells
