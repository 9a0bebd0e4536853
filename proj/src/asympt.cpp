#include "gammasg/asympt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gammasg/density.hpp"
#include "gammasg/specfun.hpp"

namespace gammasg {

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112353;

ApproxValue from_log(double log_lead, double order, Regime regime) {
    ApproxValue out;
    out.log_leading = log_lead;
    out.leading_term = std::exp(log_lead);
    out.value = out.leading_term;
    out.claimed_order = order;
    out.regime = regime;
    return out;
}

}  // namespace

ApproxValue tail_asymptotic(const SemigroupParams& params, double t) {
    params.validate();
    if (!(t > 1.0)) throw domain_error("tail_asymptotic: requires t > 1");
    const double a = params.a, b = params.b, c = params.c;
    const double lnt = std::log(t);
    const double ln_tcap = lnt / (a * c);
    const double tcap = ln_tcap > 700.0 ? std::numeric_limits<double>::infinity()
                                        : std::exp(ln_tcap);
    const double log_lead = 0.5 * (c - 1.0) * kLog2Pi - std::log(a) - 0.5 * std::log(c) -
                            c * log_gamma(b) - c * tcap +
                            ((b - 0.5 + 0.5 / c) / a - 1.0) * lnt;
    return from_log(log_lead, -1.0 / (a * c), Regime::tail);
}

ApproxValue origin_asymptotic(const SemigroupParams& params, double t) {
    params.validate();
    if (!(t > 0.0 && t < 1.0)) throw domain_error("origin_asymptotic: requires 0 < t < 1");
    const double a = params.a, b = params.b, c = params.c;
    const double lam = -std::log(t);
    const double log_lead = (b / a - 1.0) * std::log(t) + (c - 1.0) * std::log(lam) -
                            c * (std::log(a) + log_gamma(b)) - log_gamma(c);
    return from_log(log_lead, -1.0, Regime::origin);
}

OriginLimit limit_behavior(const SemigroupParams& params) {
    params.validate();
    const double ratio = params.b / params.a;
    if (ratio > 1.0) return OriginLimit::to_zero;
    if (ratio < 1.0) return OriginLimit::to_infinity;
    if (params.c > 1.0) return OriginLimit::to_infinity;
    return OriginLimit::zero_iff_c_below_one;
}

const char* to_string(OriginLimit lim) {
    switch (lim) {
        case OriginLimit::to_zero: return "to-zero";
        case OriginLimit::to_infinity: return "to-infinity";
        case OriginLimit::zero_iff_c_below_one: return "zero-if-c-lt-1";
    }
    return "?";
}

double verify_order(const SemigroupParams& params, Regime regime,
                    std::span<const double> t_grid) {
    params.validate();
    if (t_grid.size() < 4) throw grid_error("verify_order: need at least 4 grid points");
    double lo = t_grid[0], hi = t_grid[0];
    for (double t : t_grid) {
        require_positive(t, "verify_order: t");
        lo = std::min(lo, t);
        hi = std::max(hi, t);
    }
    if (hi / lo < 99.0) throw grid_error("verify_order: grid must span >= 2 decades");

    std::vector<double> xs, ys;
    xs.reserve(t_grid.size());
    ys.reserve(t_grid.size());
    for (double t : t_grid) {
        const ApproxValue lead = regime == Regime::tail ? tail_asymptotic(params, t)
                                                        : origin_asymptotic(params, t);
        const DensityValue dv = density(params, t);
        const double rel = std::abs(std::expm1(dv.log_value - lead.log_leading));
        const double x = regime == Regime::tail ? std::log(t) : std::log(-std::log(t));
        xs.push_back(x);
        ys.push_back(std::log(std::max(rel, 1e-300)));
    }

    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw grid_error("verify_order: degenerate grid");
    return sxy / sxx;
}

}  // namespace gammasg
