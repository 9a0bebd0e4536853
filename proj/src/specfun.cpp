#include "gammasg/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace gammasg {

namespace {

using cplx = std::complex<double>;

constexpr double kLog2Pi = 1.8378770664093454835606594728112353;  // log(2*pi)
constexpr double kEuler = std::numbers::egamma;

// Stirling series coefficients B_{2k} / ((2k-1)(2k)), k = 1..10.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// Even Bernoulli numbers B_2, B_4, ..., B_20.
constexpr std::array<double, 10> kBernoulli = {
    1.0 / 6.0,     -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,      5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0,     -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0,
};

bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0; }

// Stirling + Binet series, valid for Re z >= ~8. Principal Log is the
// holomorphic branch there.
cplx log_gamma_stirling(cplx z, int terms) {
    const cplx w = 1.0 / z;
    const cplx w2 = w * w;
    cplx series = kStirling[terms - 1];
    for (int k = terms - 2; k >= 0; --k) series = series * w2 + kStirling[k];
    series *= w;
    return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + series;
}

cplx log_gamma_stirling_recurrence(cplx z, const BranchPolicy& policy) {
    const double thr = policy.recurrence_threshold;
    if (z.real() >= thr) return log_gamma_stirling(z, policy.binet_terms);
    // log Gamma(z) = log Gamma(z+m) - sum_j Log(z+j). Each shifted argument
    // stays off the principal cut because z itself does, so the principal
    // logs sum to a continuous function on the cut plane; the value at z = 1
    // fixes the branch constant to zero.
    const int m = static_cast<int>(std::ceil(thr - z.real()));
    cplx shift_sum = 0.0;
    for (int j = 0; j < m; ++j) shift_sum += std::log(z + static_cast<double>(j));
    return log_gamma_stirling(z + static_cast<double>(m), policy.binet_terms) - shift_sum;
}

// Weierstrass product route:
//   -log Gamma(z) = euler*z + Log z + sum_{k>=1} (Log(1+z/k) - z/k).
// The sum is truncated at n terms and the tail resummed through
//   sum_{k>n} (Log(1+z/k) - z/k) = sum_{j>=2} (-1)^{j+1} z^j zeta(j, n+1) / j,
// convergent for |z| < n+1; n is raised so |z|/(n+1) <= 1/4.
cplx log_gamma_weierstrass(cplx z, const BranchPolicy& policy) {
    const double az = std::abs(z);
    const long n = std::max<long>(policy.series_terms, static_cast<long>(4.0 * az) + 50);
    cplx acc = -kEuler * z - std::log(z);
    for (long k = 1; k <= n; ++k) {
        const double inv = 1.0 / static_cast<double>(k);
        acc -= std::log(1.0 + z * inv) - z * inv;
    }
    const double q = static_cast<double>(n + 1);
    cplx zp = z * z;  // z^j starting at j = 2
    double sign = -1.0;  // (-1)^{j+1} for j = 2
    for (int j = 2; j <= 120; ++j) {
        const cplx term = sign * zp * (hurwitz_zeta(static_cast<double>(j), q) / j);
        acc -= term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(acc))) break;
        zp *= z;
        sign = -sign;
    }
    return acc;
}

// ---- digamma ----------------------------------------------------------

double digamma_asymptotic(double x) {
    const double w = 1.0 / x;
    const double w2 = w * w;
    // log x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
    double series = 0.0;
    for (int k = 7; k >= 1; --k) series = (series + kBernoulli[k - 1] / (2.0 * k)) * w2;
    return std::log(x) - 0.5 * w - series;
}

// ---- K_0 pieces --------------------------------------------------------

double bessel_k0_series(double x) {
    // K_0 = -(log(x/2)+euler) I_0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 * H_k
    const double q = 0.25 * x * x;
    double i0 = 1.0, hsum = 0.0;
    double term = 1.0, hk = 0.0;
    for (int k = 1; k <= 40; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        i0 += term;
        hsum += term * hk;
        if (term * (1.0 + hk) < 1e-18 * (i0 + hsum)) break;
    }
    return -(std::log(0.5 * x) + kEuler) * i0 + hsum;
}

// exp(x) K_0(x) = int_0^inf exp(-x(cosh u - 1)) du, evaluated by the
// trapezoid rule, which converges spectrally on this integrand.
double bessel_k0_scaled_quadrature(double x) {
    const double cut = 45.0 / x;  // cosh u - 1 beyond which the integrand is negligible
    const double umax = std::acosh(1.0 + cut);
    double h = 0.5;
    auto sum_with = [&](double step) {
        double s = 0.5;  // node u = 0 with trapezoid half-weight
        for (double u = step; u <= umax; u += step) s += std::exp(-x * (std::cosh(u) - 1.0));
        return s * step;
    };
    double prev = sum_with(h);
    for (int level = 0; level < 12; ++level) {
        h *= 0.5;
        const double cur = sum_with(h);
        if (std::abs(cur - prev) <= 1e-14 * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

double bessel_k0_scaled_asymptotic(double x) {
    // sqrt(pi/(2x)) * (1 - 1/(8x) + 9/(128 x^2) - ...)
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 40; ++k) {
        const double m = 2.0 * k + 1.0;
        const double next = -term * m * m / (8.0 * (k + 1.0) * x);
        if (std::abs(next) >= std::abs(term)) break;  // asymptotic series turned
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::sqrt(std::numbers::pi / (2.0 * x)) * sum;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z, const BranchPolicy& policy) {
    policy.validate();
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("log_gamma: argument must be finite");
    if (on_cut(z)) throw domain_error("log_gamma: argument on the cut (-inf, 0]");
    if (std::abs(z) > 1e300)
        throw overflow_error("log_gamma: |z| beyond the representable Stirling range");
    if (policy.method == BranchMethod::weierstrass_series) return log_gamma_weierstrass(z, policy);
    return log_gamma_stirling_recurrence(z, policy);
}

double log_gamma(double x) {
    require_positive(x, "log_gamma: x");
    if (x > 1e300) throw overflow_error("log_gamma: x beyond the representable Stirling range");
    static const BranchPolicy policy{};
    if (x >= policy.recurrence_threshold) {
        const double w = 1.0 / x, w2 = w * w;
        double series = kStirling[9];
        for (int k = 8; k >= 0; --k) series = series * w2 + kStirling[k];
        return (x - 0.5) * std::log(x) - x + 0.5 * kLog2Pi + series * w;
    }
    const int m = static_cast<int>(std::ceil(policy.recurrence_threshold - x));
    double shift_sum = 0.0;
    for (int j = 0; j < m; ++j) shift_sum += std::log(x + j);
    return log_gamma(x + m) - shift_sum;
}

double real_gamma(double x) {
    const double lg = log_gamma(x);
    if (lg > 709.0) throw overflow_error("real_gamma: result overflows");
    return std::exp(lg);
}

std::complex<double> gamma_power(std::complex<double> z, double c, const BranchPolicy& policy) {
    require_positive(c, "gamma_power: c");
    const cplx lg = log_gamma(z, policy);
    if (c * lg.real() > 709.0) throw overflow_error("gamma_power: c * Re log_gamma overflows");
    return std::exp(c * lg);
}

double digamma(double x) {
    require_positive(x, "digamma: x");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    return acc + digamma_asymptotic(x);
}

double polygamma(int n, double x) {
    if (n < 0) throw domain_error("polygamma: n must be >= 0");
    require_positive(x, "polygamma: x");
    if (n == 0) return digamma(x);
    if (n > 60) throw overflow_error("polygamma: order too large");

    // Recurrence up, then the asymptotic series
    //   Psi^(n)(x) ~ (-1)^(n-1) [ (n-1)!/x^n + n!/(2 x^{n+1})
    //                + sum_k B_{2k} (2k+n-1)! / ((2k)! x^{2k+n}) ].
    const double threshold = 13.0 + n;
    double acc = 0.0;
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
    while (x < threshold) {
        // Psi^(n)(x) = Psi^(n)(x+1) - (-1)^n n! / x^{n+1}
        acc -= sign_n * std::exp(log_gamma(static_cast<double>(n) + 1.0) -
                                 (n + 1.0) * std::log(x));
        x += 1.0;
    }

    const double lg_n = log_gamma(static_cast<double>(n));  // log (n-1)!
    double series = std::exp(lg_n - n * std::log(x));        // (n-1)!/x^n
    series += std::exp(lg_n + std::log(static_cast<double>(n)) - (n + 1.0) * std::log(x)) * 0.5;
    // term_k = B_{2k} (2k+n-1)! / ((2k)! x^{2k+n}); build by ratio from k=1.
    double fact_ratio = 1.0;  // (2k+n-1)! / ((2k)! ) / (n-1)!  at k, times x^{-2k}
    const double x2 = x * x;
    double base = std::exp(lg_n - n * std::log(x));
    for (int k = 1; k <= 10; ++k) {
        fact_ratio *= (2.0 * k + n - 1.0) * (2.0 * k + n - 2.0) / ((2.0 * k) * (2.0 * k - 1.0));
        base /= x2;
        const double term = kBernoulli[k - 1] * fact_ratio * base;
        series += term;
        if (std::abs(term) < 1e-18 * std::abs(series)) break;
    }
    return acc + ((n % 2 == 1) ? 1.0 : -1.0) * series;
}

double hurwitz_zeta(double s, double q) {
    if (!(std::isfinite(s) && s > 1.0)) throw domain_error("hurwitz_zeta: requires s > 1");
    require_positive(q, "hurwitz_zeta: q");

    // Euler-Maclaurin: push the argument to P = q + m >= max(16, 0.7 s) so the
    // Bernoulli corrections decay, then
    //   zeta(s,q) = sum_{k<m} (q+k)^{-s} + P^{1-s}/(s-1) + P^{-s}/2 + corrections.
    const double target = std::max(16.0, 0.7 * s);
    const int m = q >= target ? 0 : static_cast<int>(std::ceil(target - q));
    double head = 0.0;
    for (int k = 0; k < m; ++k) head += std::pow(q + k, -s);
    const double p = q + m;
    double tail = std::pow(p, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(p, -s);
    double rising = s;            // s (s+1) ... (s+2i-2), starts at i=1 as s
    double fact = 2.0;            // (2i)!
    double pw = std::pow(p, -s - 1.0);
    const double p2 = p * p;
    for (int i = 1; i <= 10; ++i) {
        const double term = kBernoulli[i - 1] / fact * rising * pw;
        tail += term;
        if (std::abs(term) < 1e-18 * std::abs(tail)) break;
        rising *= (s + 2.0 * i - 1.0) * (s + 2.0 * i);
        fact *= (2.0 * i + 1.0) * (2.0 * i + 2.0);
        pw /= p2;
    }
    return head + tail;
}

double bessel_k0_scaled(double x) {
    require_positive(x, "bessel_k0: x");
    if (x <= 2.0) return std::exp(x) * bessel_k0_series(x);
    if (x < 18.0) return bessel_k0_scaled_quadrature(x);
    return bessel_k0_scaled_asymptotic(x);
}

double bessel_k0(double x) {
    // exp(-x) underflows to 0 beyond x ~ 745; documented behaviour.
    return std::exp(-x) * bessel_k0_scaled(x);
}

std::complex<double> binet_mu(std::complex<double> z) {
    if (!(z.real() > 0.0)) throw domain_error("binet_mu: requires Re z > 0");
    return log_gamma(z) - (z - 0.5) * std::log(z) + z - 0.5 * kLog2Pi;
}

}  // namespace gammasg
