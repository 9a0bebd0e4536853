#pragma once

#include <span>

#include "gammasg/common.hpp"

namespace gammasg {

enum class Regime { tail, origin };

// A leading-term approximation together with its claimed error order:
// for the tail regime the relative error is O(t^{-1/(ac)}) (claimed_order
// = -1/(ac), fitted against log t); for the origin regime it is one power
// of log(1/t) lower than the leading term (claimed_order = -1, fitted
// against log log(1/t)).
struct ApproxValue {
    double value = 0.0;        // equals leading_term (no higher corrections shipped)
    double leading_term = 0.0;
    double log_leading = 0.0;  // natural log; finite even when the value underflows
    double claimed_order = 0.0;
    Regime regime = Regime::tail;
};

// Large-t approximation
//   (2pi)^{(c-1)/2} / (a sqrt(c) Gamma(b)^c) * exp(-c t^{1/(ac)})
//     / t^{1 - (b - 1/2 + 1/(2c))/a},  t > 1.
ApproxValue tail_asymptotic(const SemigroupParams& params, double t);

// Small-t approximation
//   t^{b/a-1} [log(1/t)]^{c-1} / ([a Gamma(b)]^c Gamma(c)),  0 < t < 1.
ApproxValue origin_asymptotic(const SemigroupParams& params, double t);

// Behaviour of the density at t -> 0: driven by b/a, with the boundary
// b/a = 1 split by c (to infinity as a power of log(1/t) for c > 1; the
// zero_iff_c_below_one marker covers c <= 1, where the limit is 0 for
// c < 1 and a positive constant at c = 1).
enum class OriginLimit { to_zero, to_infinity, zero_iff_c_below_one };

OriginLimit limit_behavior(const SemigroupParams& params);

const char* to_string(OriginLimit lim);

// Least-squares slope of log|density/leading - 1| against log t (tail) or
// log log(1/t) (origin) over the grid. Expected ~ -1/(ac) for the tail and
// ~ -1 for the origin. Requires >= 4 points spanning >= 2 decades.
double verify_order(const SemigroupParams& params, Regime regime, std::span<const double> t_grid);

}  // namespace gammasg
