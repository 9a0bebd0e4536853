#include "gammasg/gumbel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gammasg/density.hpp"
#include "gammasg/quadrature.hpp"
#include "gammasg/specfun.hpp"

namespace gammasg {

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112353;

double binomial(int n, int k) {
    // Exact in double through n = 30 (C(30,15) < 2^53).
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CumulantSet cumulants(double a, double b, int n_max) {
    require_positive(a, "cumulants: a");
    require_positive(b, "cumulants: b");
    if (n_max < 0) throw domain_error("cumulants: n_max must be >= 0");
    CumulantSet out;
    out.a = a;
    out.b = b;
    out.sigma.reserve(n_max + 1);
    out.sigma.push_back(-a * digamma(b));
    double a_pow = a;   // a^{n+1}
    double fact = 1.0;  // n!
    for (int n = 1; n <= n_max; ++n) {
        a_pow *= a;
        fact *= n;
        out.sigma.push_back(a_pow * fact * hurwitz_zeta(n + 1.0, b));
    }
    return out;
}

MomentPolynomial::MomentPolynomial(int n_max, std::vector<double> coeffs)
    : n_max_(n_max), coeffs_(std::move(coeffs)) {}

double MomentPolynomial::coeff(int n, int k) const {
    if (n < 1 || n > n_max_ || k < 1 || k > n)
        throw domain_error("MomentPolynomial::coeff: index outside the triangle");
    return coeffs_[static_cast<std::size_t>(n) * (n - 1) / 2 + (k - 1)];
}

double MomentPolynomial::evaluate(int n, double c) const {
    if (n == 0) return 1.0;
    double s = 0.0, comp = 0.0, cp = 1.0;
    for (int k = 1; k <= n; ++k) {
        cp *= c;
        const double term = coeff(n, k) * cp;
        const double y = term - comp;
        const double snew = s + y;
        comp = (snew - s) - y;
        s = snew;
    }
    return s;
}

MomentPolynomial moment_polynomials(const CumulantSet& cums, int n_max) {
    if (n_max < 1) throw domain_error("moment_polynomials: n_max must be >= 1");
    if (n_max > 30) throw domain_error("moment_polynomials: n_max capped at 30");
    if (static_cast<int>(cums.sigma.size()) < n_max)
        throw domain_error("moment_polynomials: cumulant set too short (need sigma_0..sigma_{n-1})");

    std::vector<std::vector<double>> a(n_max + 1);
    for (int n = 1; n <= n_max; ++n) {
        a[n].assign(n + 1, 0.0);
        a[n][1] = cums.sigma[n - 1];  // base column k = 1
    }
    // a_{n+1,k+1} = sum_{j=k}^{n} a_{j,k} C(n,j) sigma_{n-j}, Kahan-compensated.
    for (int n = 1; n < n_max; ++n) {
        for (int k = 1; k <= n; ++k) {
            double s = 0.0, comp = 0.0;
            for (int j = k; j <= n; ++j) {
                const double term = a[j][k] * binomial(n, j) * cums.sigma[n - j];
                const double y = term - comp;
                const double snew = s + y;
                comp = (snew - s) - y;
                s = snew;
            }
            a[n + 1][k + 1] = s;
        }
    }

    std::vector<double> packed;
    packed.reserve(static_cast<std::size_t>(n_max) * (n_max + 1) / 2);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) packed.push_back(a[n][k]);
    return MomentPolynomial(n_max, std::move(packed));
}

double log_gumbel_density_c1(const SemigroupParams& params, double x) {
    params.validate();
    if (params.c != 1.0) throw domain_error("log_gumbel_density_c1: requires c == 1");
    const double a = params.a, b = params.b;
    const double inner = -x / a > 700.0 ? std::numeric_limits<double>::infinity()
                                        : std::exp(-x / a);
    return -b * x / a - inner - std::log(a) - log_gamma(b);
}

double gumbel_density(const SemigroupParams& params, double x) {
    params.validate();
    if (!std::isfinite(x)) throw domain_error("gumbel_density: x must be finite");
    if (params.c == 1.0) return std::exp(log_gumbel_density_c1(params, x));
    if (std::abs(x) > 700.0)
        throw overflow_error("gumbel_density: e^{-x} not representable and no closed form for this c");
    const double t = std::exp(-x);
    const DensityValue dv = density(params, t);
    return std::exp(-x + dv.log_value);
}

double log_gumbel_tail_left(const SemigroupParams& params, double x) {
    params.validate();
    const double a = params.a, c = params.c;
    const double x0 = 5.0 * std::max(a, a * c);
    if (!(x <= -x0)) throw regime_error("gumbel_tail_left: requires x <= -5 max(a, ac)");
    const double inner = -x / (a * c) > 700.0 ? std::numeric_limits<double>::infinity()
                                              : std::exp(-x / (a * c));
    return 0.5 * (c - 1.0) * kLog2Pi - std::log(a * std::sqrt(c)) - c * log_gamma(params.b) -
           c * inner - x * (params.b - 0.5 + 0.5 / c) / a;
}

double log_gumbel_tail_right(const SemigroupParams& params, double x) {
    params.validate();
    const double a = params.a, b = params.b, c = params.c;
    const double x0 = 5.0 * std::max(a, a * c);
    if (!(x >= x0)) throw regime_error("gumbel_tail_right: requires x >= 5 max(a, ac)");
    return -b * x / a + (c - 1.0) * std::log(x) - c * (std::log(a) + log_gamma(b)) -
           log_gamma(c);
}

double gumbel_tail_left(const SemigroupParams& params, double x) {
    return std::exp(log_gumbel_tail_left(params, x));
}

double gumbel_tail_right(const SemigroupParams& params, double x) {
    return std::exp(log_gumbel_tail_right(params, x));
}

double gumbel_moment_quadrature(const SemigroupParams& params, int n) {
    params.validate();
    if (n < 0 || n > 8) throw domain_error("gumbel_moment_quadrature: n must be in [0, 8]");
    const double a = params.a, b = params.b, c = params.c;

    // Right cut: e^{-bx/a} x^{c-1+n} below 1e-12 relative to O(1) totals.
    double xr = 10.0 * a / b + 5.0;
    for (int it = 0; it < 80; ++it) {
        const double lb = -b * xr / a + (c - 1.0 + n) * std::log(xr);
        if (lb < -34.0) break;
        xr *= 1.3;
    }
    // Left cut: double-exponential factor exp(-c e^{-x/(ac)}).
    double xl = -(a * c * std::log(60.0 / c) + 5.0 * std::max(a, a * c));
    for (int it = 0; it < 80; ++it) {
        const double lb = -c * std::exp(-xl / (a * c)) - xl * (b - 0.5 + 0.5 / c) / a +
                          n * std::log(std::abs(xl) + 1.0);
        if (lb < -34.0) break;
        xl -= std::max(1.0, 0.2 * std::abs(xl));
    }

    BandedDensityEvaluator eval(params);
    auto f = [&](double x) {
        const double g = std::exp(-x + eval.log_density(-x));
        return n == 0 ? g : std::pow(x, n) * g;
    };
    const QuadResult q = integrate(f, xl, xr, 1e-9, 1e-8);
    const double tol = 1e-5 * std::abs(q.value) + 1e-8;
    if (q.abs_err > tol)
        throw accuracy_error("gumbel_moment_quadrature: estimated error above tolerance");
    return q.value;
}

std::vector<double> hamburger_carleman_bound(double a, double b, int n_max) {
    require_positive(a, "hamburger_carleman_bound: a");
    require_positive(b, "hamburger_carleman_bound: b");
    if (n_max < 2) throw domain_error("hamburger_carleman_bound: n_max must be >= 2");
    std::vector<double> ratios;
    ratios.reserve(n_max);
    const double lgb = log_gamma(b);
    for (int n = 1; n <= n_max; ++n) {
        const double two_n = 2.0 * n;
        const double log_t1 = (log_gamma(two_n + 1.0) - (two_n + 1.0) * std::log(b)) / two_n;
        const double log_t2 = log_gamma(two_n + b) / two_n;
        const double bound = a * std::exp(-lgb / two_n) * (std::exp(log_t1) + std::exp(log_t2));
        ratios.push_back(bound / n);
    }
    return ratios;
}

}  // namespace gammasg
