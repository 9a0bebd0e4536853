#pragma once

#include <vector>

#include "gammasg/common.hpp"

namespace gammasg {

// Cumulants of the additive-line semigroup obtained from the multiplicative
// one through x = log(1/t):
//   sigma_0 = -a Psi(b),  sigma_n = a^{n+1} n! zeta(n+1, b)  (n >= 1).
struct CumulantSet {
    double a = 1.0;
    double b = 1.0;
    std::vector<double> sigma;  // sigma_0..sigma_N
};

CumulantSet cumulants(double a, double b, int n_max);

// Moments of the additive densities are polynomials in c:
//   s_n(c) = sum_{k=1}^n a_{n,k} c^k,
// with a_{n,1} = sigma_{n-1} and
//   a_{n+1,k+1} = sum_{j=k}^n a_{j,k} C(n,j) sigma_{n-j}.
// Lower-triangular table for 1 <= k <= n <= n_max.
class MomentPolynomial {
  public:
    MomentPolynomial(int n_max, std::vector<double> coeffs);

    int max_order() const { return n_max_; }
    double coeff(int n, int k) const;          // a_{n,k}
    double evaluate(int n, double c) const;    // s_n(c)

  private:
    int n_max_;
    std::vector<double> coeffs_;  // row-packed triangle
};

// n_max is capped at 30 by default growth considerations; the coefficients
// grow factorially. Throws domain_error when the cumulant set is too short.
MomentPolynomial moment_polynomials(const CumulantSet& cums, int n_max);

// g_c(a,b)(x) = e^{-x} e_c(a,b)(e^{-x}). For |x| > 700 only c = 1 has a
// log-domain closed form; other c throw (e^{-x} is not representable).
double gumbel_density(const SemigroupParams& params, double x);

// log g_c(a,b)(x) for the closed-form cases c = 1, 2 (stable at any x for
// c = 1 and for x <= 700*2a at c = 2); used by tail diagnostics.
double log_gumbel_density_c1(const SemigroupParams& params, double x);

// Leading tail terms: for x -> -inf,
//   (2pi)^{(c-1)/2}/(a sqrt(c) Gamma(b)^c) exp(-c e^{-x/(ac)}) e^{-x(b-1/2+1/(2c))/a};
// for x -> +inf,
//   e^{-bx/a} x^{c-1} / ([a Gamma(b)]^c Gamma(c)).
// The regime threshold is |x| >= 5 max(a, ac).
double gumbel_tail_left(const SemigroupParams& params, double x);
double gumbel_tail_right(const SemigroupParams& params, double x);

// Log-domain forms of the same leading terms; finite even where the linear
// value underflows (log_gumbel_tail_left is -inf once exp(-x/(ac)) itself
// overflows).
double log_gumbel_tail_left(const SemigroupParams& params, double x);
double log_gumbel_tail_right(const SemigroupParams& params, double x);

// Adaptive quadrature of x^n g_c over the real line, n <= 8.
double gumbel_moment_quadrature(const SemigroupParams& params, int n);

// Upper bound for s_{2n}^{1/(2n)} divided by n, n = 1..n_max:
//   a Gamma(b)^{-1/(2n)} [ ((2n)!/b^{2n+1})^{1/(2n)} + Gamma(2n+b)^{1/(2n)} ] / n.
// Boundedness of this sequence is the Carleman evidence that the whole-line
// moment problems are determinate.
std::vector<double> hamburger_carleman_bound(double a, double b, int n_max);

}  // namespace gammasg
