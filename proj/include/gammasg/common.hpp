#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gammasg {

// Error hierarchy. Every failure surfaced by the library is one of these,
// so callers can distinguish bad inputs from numerical breakdowns.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (cut, nonpositive, nonfinite).
class domain_error : public error {
  public:
    using error::error;
};

// Result or intermediate exceeds the representable range.
class overflow_error : public error {
  public:
    using error::error;
};

// A quadrature or series failed to reach its requested tolerance.
class accuracy_error : public error {
  public:
    using error::error;
};

// Input lies outside the regime an asymptotic/shifted method is valid in.
class regime_error : public error {
  public:
    using error::error;
};

// An InversionPlan violates its own invariants.
class plan_error : public error {
  public:
    using error::error;
};

// The integrand phase moved by more than pi between adjacent nodes.
class branch_error : public error {
  public:
    using error::error;
};

// A fitting grid is too small or spans too little range.
class grid_error : public error {
  public:
    using error::error;
};

// Parameter triple (a, b, c) of the product-convolution semigroup family.
// All three must be finite and strictly positive.
struct SemigroupParams {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;

    void validate() const {
        if (!(std::isfinite(a) && a > 0.0))
            throw domain_error("SemigroupParams: a must be finite and > 0, got " + std::to_string(a));
        if (!(std::isfinite(b) && b > 0.0))
            throw domain_error("SemigroupParams: b must be finite and > 0, got " + std::to_string(b));
        if (!(std::isfinite(c) && c > 0.0))
            throw domain_error("SemigroupParams: c must be finite and > 0, got " + std::to_string(c));
    }
};

inline void require_positive(double x, const char* name) {
    if (!(std::isfinite(x) && x > 0.0))
        throw domain_error(std::string(name) + " must be finite and > 0");
}

}  // namespace gammasg
