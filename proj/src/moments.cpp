#include "gammasg/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gammasg/density.hpp"
#include "gammasg/quadrature.hpp"
#include "gammasg/specfun.hpp"

namespace gammasg {

double log_moment(const SemigroupParams& params, long n) {
    params.validate();
    if (n < 0) throw domain_error("log_moment: n must be >= 0");
    if (n == 0) return 0.0;
    return params.c *
           (log_gamma(params.a * static_cast<double>(n) + params.b) - log_gamma(params.b));
}

double moment(const SemigroupParams& params, long n) {
    const double lm = log_moment(params, n);
    if (lm > 709.0) throw overflow_error("moment: linear-domain value overflows; use log_moment");
    return std::exp(lm);
}

MomentSequence moment_sequence(const SemigroupParams& params, int n_max) {
    if (n_max < 0) throw domain_error("moment_sequence: n_max must be >= 0");
    MomentSequence seq;
    seq.params = params;
    seq.values.reserve(n_max + 1);
    seq.log_values.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double lm = log_moment(params, n);
        seq.log_values.push_back(lm);
        seq.values.push_back(lm > 709.0 ? std::numeric_limits<double>::infinity() : std::exp(lm));
    }
    return seq;
}

DeterminacyVerdict classify(const SemigroupParams& params) {
    params.validate();
    const double ac = params.a * params.c;
    DeterminacyVerdict v;
    v.determinate = ac <= 2.0;
    v.boundary = ac == 2.0;
    return v;
}

CarlemanDiagnostic carleman_diagnostic(const SemigroupParams& params, long n_terms) {
    params.validate();
    if (n_terms < 10) throw domain_error("carleman_diagnostic: need at least 10 terms");
    CarlemanDiagnostic diag;
    diag.partial_sums.reserve(n_terms);
    const double lgb = log_gamma(params.b);
    double sum = 0.0, comp = 0.0;
    std::vector<double> log_terms(n_terms);
    for (long n = 1; n <= n_terms; ++n) {
        const double lt = -params.c / (2.0 * n) *
                          (log_gamma(params.a * static_cast<double>(n) + params.b) - lgb);
        log_terms[n - 1] = lt;
        const double term = std::exp(lt);
        const double y = term - comp;
        const double snew = sum + y;
        comp = (snew - sum) - y;
        sum = snew;
        diag.partial_sums.push_back(sum);
    }

    // Fit log T_n vs log n over the top decade, ~64 log-spaced points.
    const long n_hi = n_terms;
    const long n_lo = std::max<long>(10, n_terms / 10);
    const int fit_points = 64;
    double mx = 0.0, my = 0.0;
    std::vector<double> xs, ys;
    for (int i = 0; i < fit_points; ++i) {
        const double frac = static_cast<double>(i) / (fit_points - 1);
        const long n = std::lround(n_lo * std::pow(static_cast<double>(n_hi) / n_lo, frac));
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(log_terms[n - 1]);
        mx += xs.back();
        my += ys.back();
    }
    mx /= fit_points;
    my /= fit_points;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < fit_points; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    diag.fitted_exponent = sxy / sxx;
    return diag;
}

KreinDiagnostic krein_diagnostic(const SemigroupParams& params, double k_lo, double t_hi) {
    params.validate();
    if (!(k_lo >= 1.0)) throw domain_error("krein_diagnostic: requires K >= 1");
    if (!(t_hi > k_lo)) throw domain_error("krein_diagnostic: requires T > K");
    const double a = params.a, b = params.b, c = params.c;
    const double ac = a * c;
    // The tail form must apply at the upper limit: (T^2)^{1/(ac)} >= max(b, 2).
    if (2.0 * std::log(t_hi) / ac < std::log(std::max(b, 2.0)))
        throw regime_error("krein_diagnostic: T too small for the tail regime");

    const double lgb = log_gamma(b);
    const double log_const = 0.5 * (c - 1.0) * std::log(2.0 * std::numbers::pi) -
                             std::log(a * std::sqrt(c)) - c * lgb;
    const double power = (b - 0.5 + 0.5 / c) / a - 1.0;
    auto integrand = [&](double t) {
        const double log_t2 = 2.0 * std::log(t);
        const double log_density = log_const - c * std::exp(log_t2 / ac) + power * log_t2;
        return log_density / (1.0 + t * t);
    };
    const QuadResult q = integrate(integrand, k_lo, t_hi, 1e-9, 1e-9);

    KreinDiagnostic diag;
    diag.integral_estimate = q.value;
    diag.exponent = 2.0 / ac;
    diag.bounded_at_infinity = diag.exponent < 1.0;
    return diag;
}

double moment_by_quadrature(const SemigroupParams& params, int n, double rel_tol) {
    params.validate();
    if (n < 0 || n > 12) throw domain_error("moment_by_quadrature: n must be in [0, 12]");
    if (!(rel_tol > 0.0 && rel_tol < 0.1))
        throw domain_error("moment_by_quadrature: rel_tol out of range");

    // Window the u = log t integral from the density envelope. The integrand
    // bound is (n+1) u + log bound(e_c at e^u); walk out from the peak until
    // it drops ~30 e-foldings.
    auto log_bound = [&](double u) {
        return (n + 1.0) * u + detail::log_density_bound(params, u);
    };
    // The mode sits near u ~ ac log(a(n+1)); size the scan to the parameters.
    const double ac = params.a * params.c;
    const double scan_hi =
        std::max(40.0, 2.0 * ac * std::log(2.0 + params.a * (n + 1.0)) +
                           ac * std::log(std::max(params.b, 2.0)) + 20.0);
    double peak_u = 0.0, peak = log_bound(0.0);
    for (double u = -40.0; u <= scan_hi; u += 0.5) {
        const double v = log_bound(u);
        if (v > peak) {
            peak = v;
            peak_u = u;
        }
    }
    double lo = peak_u, hi = peak_u;
    for (int it = 0; it < 2000 && log_bound(lo) > peak - 30.0; ++it) lo -= 1.0;
    for (int it = 0; it < 2000 && log_bound(hi) > peak - 30.0; ++it) hi += 1.0;

    BandedDensityEvaluator eval(params);
    auto f = [&](double u) { return std::exp((n + 1.0) * u + eval.log_density(u)); };
    const QuadResult q = integrate(f, lo, hi, std::exp(peak - 20.0), rel_tol);
    return q.value;
}

}  // namespace gammasg
