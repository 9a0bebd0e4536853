#pragma once

#include <complex>

#include "gammasg/common.hpp"

namespace gammasg {

// How the branch-continuous complex log-gamma is evaluated. Both methods
// produce the same holomorphic branch on C \ (-inf, 0], anchored by
// log_gamma(1) = 0; they exist as independent routes for cross-checking.
enum class BranchMethod {
    // Truncated Weierstrass product series with a zeta-tail correction.
    // Slow but derived directly from the product representation.
    weierstrass_series,
    // Stirling series with Binet remainder, pushed right by the recurrence
    // log Gamma(z) = log Gamma(z+m) - sum log(z+j). Production path.
    stirling_binet,
};

struct BranchPolicy {
    BranchMethod method = BranchMethod::stirling_binet;
    // Minimum Re z before the Stirling series is applied directly.
    double recurrence_threshold = 9.0;
    // Weierstrass: minimum number of explicit product terms.
    int series_terms = 400;
    // Stirling: number of Bernoulli terms (max 10).
    int binet_terms = 10;

    void validate() const {
        if (!(recurrence_threshold >= 8.0))
            throw domain_error("BranchPolicy: recurrence_threshold must be >= 8");
        if (series_terms < 16) throw domain_error("BranchPolicy: series_terms too small");
        if (binet_terms < 4 || binet_terms > 10)
            throw domain_error("BranchPolicy: binet_terms must be in [4, 10]");
    }
};

// log Gamma on the cut plane C \ (-inf, 0], holomorphic branch with
// log_gamma(1) = 0. The imaginary part is continuous along any path in the
// cut plane and is NOT reduced mod 2*pi. Throws domain_error on the cut,
// overflow_error when |z| leaves the representable Stirling range.
std::complex<double> log_gamma(std::complex<double> z, const BranchPolicy& policy = {});

// Real-argument log Gamma for x > 0 (same algorithm, real arithmetic).
double log_gamma(double x);

// Gamma(x) for real x > 0; overflow_error for x beyond exp range.
double real_gamma(double x);

// Gamma(z)^c := exp(c * log_gamma(z)) on the cut plane, c > 0.
std::complex<double> gamma_power(std::complex<double> z, double c,
                                 const BranchPolicy& policy = {});

// Psi(x), x > 0.
double digamma(double x);

// Psi^(n)(x), n >= 0, x > 0. n = 0 is digamma.
double polygamma(int n, double x);

// Hurwitz zeta sum_{k>=0} (q+k)^(-s) for s > 1, q > 0 (Euler-Maclaurin).
double hurwitz_zeta(double s, double q);

// Macdonald function K_0(x), x > 0. Underflows to 0 for x > ~745.
double bessel_k0(double x);

// exp(x) * K_0(x): stable for large x.
double bessel_k0_scaled(double x);

// Binet remainder mu(z) = log_gamma(z) - (z - 1/2) Log z + z - log(2*pi)/2,
// Re z > 0. Satisfies |mu(z)| <= 1/(12 Re z).
std::complex<double> binet_mu(std::complex<double> z);

}  // namespace gammasg
