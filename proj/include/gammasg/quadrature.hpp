#pragma once

#include <functional>

#include "gammasg/common.hpp"

namespace gammasg {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
    long evals = 0;
};

// Adaptive Gauss-Kronrod 7-15 on a finite interval. Subdivides the interval
// with the largest error estimate until abs_tol or rel_tol is met. Throws
// accuracy_error if the budget (max_evals) runs out first.
QuadResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     double abs_tol, double rel_tol, long max_evals = 2'000'000);

// Single GK15 panel: returns {value, |K15-G7| error estimate, 15}.
QuadResult gk15(const std::function<double(double)>& f, double lo, double hi);

}  // namespace gammasg
