#include "gammasg/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "gammasg/parallel.hpp"

namespace gammasg {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

DensityValue finish_value(double t, double log_value, double rel_err, DensityMethod method) {
    DensityValue out;
    out.t = t;
    out.log_value = log_value;
    out.value = std::exp(log_value);  // underflows to 0 in deep tails
    out.est_abs_err = rel_err * out.value;
    out.method = method;
    return out;
}

// f(u) = iu + (1-iu) Log(1-iu); series near u = 0 where the direct form cancels.
cplx saddle_phase(double u) {
    if (std::abs(u) < 0.25) {
        // f(u) = sum_{k>=2} (iu)^k / (k (k-1))
        const cplx iu(0.0, u);
        cplx p = iu * iu;
        cplx acc = 0.0;
        for (int k = 2; k <= 30; ++k) {
            const cplx term = p / (static_cast<double>(k) * (k - 1.0));
            acc += term;
            if (std::abs(term) < 1e-19 * std::abs(acc)) break;
            p *= iu;
        }
        return acc;
    }
    const cplx w(1.0, -u);
    return cplx(0.0, u) + w * std::log(w);
}

double ln_re_f(double u) {  // Re f(u) = log(1+u^2)/2 - u atan u, monotone down in |u|
    return 0.5 * std::log1p(u * u) - u * std::atan(u);
}

}  // namespace

const char* to_string(DensityMethod m) {
    switch (m) {
        case DensityMethod::closed_form_c1: return "closed-form-c1";
        case DensityMethod::closed_form_c2: return "closed-form-c2";
        case DensityMethod::inversion: return "inversion";
        case DensityMethod::shifted_inversion: return "shifted-inversion";
    }
    return "?";
}

void InversionPlan::validate(const SemigroupParams& p) const {
    p.validate();
    if (!(contour_delta > -p.b / p.a))
        throw plan_error("InversionPlan: contour_delta must exceed -b/a");
    if (!(truncation_x > 0.0) || !std::isfinite(truncation_x))
        throw plan_error("InversionPlan: truncation_x must be positive");
    if (node_count < 5 || node_count % 2 == 0)
        throw plan_error("InversionPlan: node_count must be odd and >= 5");
    if (!(target_abs_tol > 0.0)) throw plan_error("InversionPlan: target_abs_tol must be positive");
}

namespace {

InversionPlan make_plan_log(const SemigroupParams& params, double lnt_lo, double lnt_hi,
                            double target_abs_tol, double contour_delta) {
    params.validate();
    if (!std::isfinite(lnt_lo) || !std::isfinite(lnt_hi))
        throw plan_error("make_plan: log t range must be finite");
    if (lnt_hi < lnt_lo) std::swap(lnt_lo, lnt_hi);
    if (!(target_abs_tol > 0.0)) throw plan_error("make_plan: target_abs_tol must be positive");
    const double a = params.a, b = params.b, c = params.c;
    const double delta = contour_delta;
    if (!(delta > -b / a)) throw plan_error("make_plan: contour_delta must exceed -b/a");
    const double beff = b + a * delta;

    const double max_abs_lnt = std::max({1.0, std::abs(lnt_lo), std::abs(lnt_hi)});
    // Spacing: >= 8 samples per oscillation period, plus the aliasing bound
    // exp(-2*pi*beff/(a h)) <= e^{-33} from the nearest integrand pole.
    double h = std::min({0.05, kPi / (4.0 * max_abs_lnt), 2.0 * kPi * beff / (a * 33.0)});

    // Truncation: envelope |Gamma(beff-iax)|^c ~ (2pi)^{c/2} e^{-r x} (a x)^q,
    // r = pi a c / 2, q = c (beff - 1/2); require the integral tail, with the
    // t^{-delta-1}/(2pi) prefactor, below target/10 at the worst endpoint.
    const double r = 0.5 * kPi * a * c;
    const double q = c * (beff - 0.5);
    const double lgb = log_gamma(b);
    const double lead1 = -(delta + 1.0) * lnt_lo;
    const double lead2 = -(delta + 1.0) * lnt_hi;
    const double l0 = std::log(20.0 / (r * target_abs_tol)) + (0.5 * c - 1.0) * kLog2Pi -
                      c * lgb + std::max(lead1, lead2);
    double x = std::max(5.0, l0 / r);
    for (int it = 0; it < 60; ++it) {
        double nx = l0 / r;
        if (q > 0.0) nx += q * std::log(std::max(a * x, 2.0)) / r;
        nx = std::clamp(nx, 5.0, 1e6);
        if (std::abs(nx - x) < 1e-6 * x) {
            x = nx;
            break;
        }
        x = nx;
    }
    x = std::clamp(x, std::max(5.0, 3.0 / a), 1e6);

    // Build the grid at h/2: the full grid carries the value, the h-subgrid
    // the refinement difference, so the reported error is not dominated by
    // the coarse grid's own (much larger) aliasing error.
    const double h_build = 0.5 * h;
    const long m = static_cast<long>(std::ceil(x / h_build));
    if (2 * m + 1 > 40'000'000) throw plan_error("make_plan: node count exceeds sane bounds");

    InversionPlan plan;
    plan.contour_delta = delta;
    plan.truncation_x = static_cast<double>(m) * h_build;
    plan.node_count = static_cast<int>(2 * m + 1);
    plan.target_abs_tol = target_abs_tol;
    return plan;
}

}  // namespace

InversionPlan make_plan(const SemigroupParams& params, double t_lo, double t_hi,
                        double target_abs_tol, double contour_delta) {
    require_positive(t_lo, "make_plan: t_lo");
    require_positive(t_hi, "make_plan: t_hi");
    return make_plan_log(params, std::log(t_lo), std::log(t_hi), target_abs_tol, contour_delta);
}

ContourTable::ContourTable(const SemigroupParams& params, const InversionPlan& plan)
    : params_(params), plan_(plan) {
    plan.validate(params);
    const double a = params.a, b = params.b, c = params.c;
    beff_ = b + a * plan.contour_delta;
    const long m = (plan.node_count - 1) / 2;
    h_ = plan.truncation_x / static_cast<double>(m);
    const double lgb = log_gamma(b);

    nodes_.resize(static_cast<std::size_t>(m) + 1);
    double prev_phase = 0.0;
    double abs_sum = 0.0;
    double max_step = 0.0;
    for (long j = 0; j <= m; ++j) {
        const cplx z(beff_, -a * h_ * static_cast<double>(j));
        const cplx lg = log_gamma(z);
        const double phase = c * lg.imag();
        if (j > 0) max_step = std::max(max_step, std::abs(phase - prev_phase));
        prev_phase = phase;
        const cplx g = std::exp(c * (lg - lgb));
        nodes_[static_cast<std::size_t>(j)] = g;
        abs_sum += (j == 0 ? 1.0 : 2.0) * std::abs(g);
    }
    abs_sum_ = abs_sum;
    max_phase_step_ = max_step;

    tail_rate_ = 0.5 * kPi * a * c;
    const double q = c * (beff_ - 0.5);
    const double x = plan.truncation_x;
    double ln_env = 0.5 * c * kLog2Pi - c * lgb - tail_rate_ * x;
    if (q != 0.0) ln_env += q * std::log(a * x);
    double corr = 3.0;
    if (q <= 0.0)
        corr = 1.0;
    else if (tail_rate_ * x > 2.0 * q)
        corr = 1.0 / (1.0 - q / (tail_rate_ * x));
    tail_coeff_ = corr * (2.0 / tail_rate_) * std::exp(std::min(700.0, ln_env));
}

DensityValue ContourTable::eval(double t) const {
    require_positive(t, "ContourTable::eval: t");
    return eval_log(std::log(t));
}

DensityValue ContourTable::eval_log(double lnt) const {
    if (!std::isfinite(lnt)) throw domain_error("ContourTable::eval_log: log t must be finite");
    const double ang = h_ * lnt;
    // Phase continuity: oscillation step plus the Gamma-phase step must stay
    // under pi, otherwise the grid cannot see the branch.
    if (std::abs(ang) + max_phase_step_ > kPi)
        throw branch_error("ContourTable::eval: integrand phase jump between nodes exceeds pi");

    const long m = static_cast<long>(nodes_.size()) - 1;
    const cplx rot = std::polar(1.0, ang);
    cplx ph = rot;
    double sum = nodes_[0].real();
    double comp = 0.0;  // Kahan compensation
    double sum_coarse = nodes_[0].real();
    for (long j = 1; j <= m; ++j) {
        if (j % 128 == 0) ph = std::polar(1.0, ang * static_cast<double>(j));
        const cplx& g = nodes_[static_cast<std::size_t>(j)];
        const double term = 2.0 * (ph.real() * g.real() - ph.imag() * g.imag());
        const double y = term - comp;
        const double snew = sum + y;
        comp = (snew - sum) - y;
        sum = snew;
        if ((j & 1) == 0) sum_coarse += term;
        ph *= rot;
    }

    const double i_fine = h_ * sum;
    const double i_coarse = 2.0 * h_ * sum_coarse;
    const double lpref = -(plan_.contour_delta + 1.0) * lnt - kLog2Pi;
    if (lpref > 700.0) throw overflow_error("ContourTable::eval: t prefactor overflows");
    const double pref = std::exp(lpref);

    double value = i_fine * pref;
    const double roundoff = 16.0 * kEps * h_ * abs_sum_;
    double est = (std::abs(i_fine - i_coarse) + tail_coeff_ + roundoff) * pref;

    if (value < 0.0) {
        if (-value <= est)
            value = 0.0;
        else
            throw accuracy_error("ContourTable::eval: negative density beyond error estimate");
    }
    DensityValue out;
    out.t = std::exp(lnt);
    out.value = value;
    out.est_abs_err = est;
    out.method = DensityMethod::inversion;
    out.log_value = value > 0.0 ? std::log(value) : kNegInf;
    return out;
}

namespace {

double log_density_c1_core(const SemigroupParams& params, double lnt) {
    const double a = params.a, b = params.b;
    const double root = lnt / a > 700.0 ? std::numeric_limits<double>::infinity()
                                        : std::exp(lnt / a);
    return (b / a - 1.0) * lnt - root - std::log(a) - log_gamma(b);
}

double log_density_c2_core(const SemigroupParams& params, double lnt) {
    const double a = params.a, b = params.b;
    const double half_root = lnt / (2.0 * a);
    if (half_root > 700.0) return kNegInf;
    const double x = 2.0 * std::exp(half_root);
    const double log_k0 = -x + std::log(bessel_k0_scaled(x));
    return std::log(2.0) + (b / a - 1.0) * lnt - std::log(a) - 2.0 * log_gamma(b) + log_k0;
}

}  // namespace

DensityValue density_c1(const SemigroupParams& params, double t) {
    params.validate();
    if (params.c != 1.0) throw domain_error("density_c1: requires c == 1");
    require_positive(t, "density_c1: t");
    const double log_value = log_density_c1_core(params, std::log(t));
    return finish_value(t, log_value, 4.0 * kEps * (1.0 + std::abs(log_value)),
                        DensityMethod::closed_form_c1);
}

DensityValue density_c2(const SemigroupParams& params, double t) {
    params.validate();
    if (params.c != 2.0) throw domain_error("density_c2: requires c == 2");
    require_positive(t, "density_c2: t");
    const double log_value = log_density_c2_core(params, std::log(t));
    return finish_value(t, log_value, 1e-13 + 4.0 * kEps * (1.0 + std::abs(log_value)),
                        DensityMethod::closed_form_c2);
}

DensityValue density_inversion(const SemigroupParams& params, double t,
                               const InversionPlan& plan) {
    ContourTable table(params, plan);
    DensityValue out = table.eval(t);
    if (out.est_abs_err > plan.target_abs_tol)
        throw accuracy_error("density_inversion: error estimate exceeds target tolerance");
    return out;
}

namespace {

DensityValue density_shifted_core(const SemigroupParams& params, double lnt,
                                  double target_rel_tol) {
    const double a = params.a, b = params.b, c = params.c;
    const double ln_tcap = lnt / (a * c);
    if (ln_tcap > 700.0) {
        // exp(-c T) is an exact zero in double precision.
        DensityValue out;
        out.t = std::exp(lnt);
        out.value = 0.0;
        out.est_abs_err = 0.0;
        out.method = DensityMethod::shifted_inversion;
        out.log_value = kNegInf;
        return out;
    }
    const double tcap = std::exp(ln_tcap);  // T = t^{1/(ac)}
    if (!(tcap >= b))
        throw regime_error("density_shifted: requires t^{1/(ac)} >= b");

    const double ct = c * tcap;
    const double lgb = log_gamma(b);

    auto integrand_re = [&](double u) -> double {
        cplx w = ct * saddle_phase(u);
        const cplx one_minus_iu(1.0, -u);
        w -= 0.5 * c * std::log(one_minus_iu);
        w += c * binet_mu(tcap * one_minus_iu);
        return std::exp(w).real();
    };

    // Truncation: Re f decreases monotonically; push until the damped
    // envelope is ~e^{-42} below the peak scale sqrt(2 pi / ct).
    const double ln_scale = 0.5 * (kLog2Pi - std::log(ct));
    double u_max = 1.0;
    while (ct * ln_re_f(u_max) > ln_scale - 42.0 && u_max < 1e7) u_max *= 1.4;

    double h = std::min(0.5, 0.5 / std::sqrt(ct));
    auto sum_with = [&](double step) {
        double s = 0.5 * integrand_re(0.0);
        double compensation = 0.0;
        for (double u = step; u <= u_max; u += step) {
            const double term = integrand_re(u);
            const double y = term - compensation;
            const double snew = s + y;
            compensation = (snew - s) - y;
            s = snew;
        }
        return 2.0 * step * s;
    };

    double prev = sum_with(h);
    double integral = prev;
    double rel_est = 1.0;
    for (int level = 0; level < 14; ++level) {
        h *= 0.5;
        integral = sum_with(h);
        rel_est = std::abs(integral - prev) / std::max(std::abs(integral), 1e-300);
        if (rel_est <= 0.5 * target_rel_tol) break;
        prev = integral;
    }
    if (rel_est > target_rel_tol)
        throw accuracy_error("density_shifted: quadrature did not reach target tolerance");
    if (!(integral > 0.0))
        throw accuracy_error("density_shifted: nonpositive saddle integral");

    const double big_a = (1.0 / c + b - a) / a;
    const double log_pref =
        (0.5 * c - 1.0) * kLog2Pi - std::log(a) - c * lgb + (big_a - 0.5 / a) * lnt;
    const double log_value = log_pref + std::log(integral) - ct;
    return finish_value(std::exp(lnt), log_value, rel_est + 1e-12,
                        DensityMethod::shifted_inversion);
}

}  // namespace

DensityValue density_shifted(const SemigroupParams& params, double t, double target_rel_tol) {
    params.validate();
    require_positive(t, "density_shifted: t");
    return density_shifted_core(params, std::log(t), target_rel_tol);
}

namespace detail {

double log_density_bound(const SemigroupParams& params, double log_t) {
    const double a = params.a, b = params.b, c = params.c;
    const double lgb = log_gamma(b);
    if (log_t < 0.0) {
        const double lam = std::max(-log_t, 1.5);
        return (b / a - 1.0) * log_t + (c - 1.0) * std::log(lam) - c * (std::log(a) + lgb) -
               log_gamma(c) + 2.0;
    }
    // For t >= 1: the saddle form covers the decaying part (including the
    // mode region, up to an O(1) factor); the origin-branch limit at t -> 1
    // covers the plateau before the switch point T = max(b, 2).
    const double tcap_ln = log_t / (a * c);
    const double tail = tcap_ln > 690.0 ? kNegInf
                                        : 0.5 * (c - 1.0) * kLog2Pi - std::log(a * std::sqrt(c)) -
                                              c * lgb - c * std::exp(tcap_ln) +
                                              ((b - 0.5 + 0.5 / c) / a - 1.0) * log_t;
    double bound = tail;
    if (log_t <= a * c * std::log(std::max(b, 2.0))) {
        const double at_one =
            (c - 1.0) * std::log(1.5) - c * (std::log(a) + lgb) - log_gamma(c);
        bound = std::max(bound, at_one);
    }
    return bound + 3.0;
}

}  // namespace detail

DensityValue density(const SemigroupParams& params, double t) {
    params.validate();
    require_positive(t, "density: t");
    if (params.c == 1.0) return density_c1(params, t);
    if (params.c == 2.0) return density_c2(params, t);
    const double ln_tcap = std::log(t) / (params.a * params.c);
    if (ln_tcap > 700.0 || std::exp(ln_tcap) >= std::max(params.b, 2.0))
        return density_shifted(params, t);
    const double scale = std::exp(std::min(600.0, detail::log_density_bound(params, std::log(t))));
    // The second term tracks the round-off floor of the oscillatory sum,
    // whose terms are O(1) while the result carries a 1/t prefactor.
    const double tol = std::max({1e-12, 1e-9 * scale, 1e-12 / t});
    return density_inversion(params, t, make_plan(params, t, t, tol, 0.0));
}

BandedDensityEvaluator::BandedDensityEvaluator(const SemigroupParams& params, double rel_tol)
    : params_(params), rel_tol_(rel_tol) {
    params.validate();
    if (!(rel_tol > 0.0)) throw domain_error("BandedDensityEvaluator: rel_tol must be > 0");
    switch_log_t_ = params.a * params.c * std::log(std::max(params.b, 2.0));
}

double BandedDensityEvaluator::log_density(double log_t) {
    if (!std::isfinite(log_t)) throw domain_error("BandedDensityEvaluator: log_t must be finite");
    if (params_.c == 1.0) return log_density_c1_core(params_, log_t);
    if (params_.c == 2.0) return log_density_c2_core(params_, log_t);
    if (log_t >= switch_log_t_) return density_shifted_core(params_, log_t, 1e-9).log_value;

    // Bands of width 16 in log t, indexed by distance below the switch point.
    constexpr double kBandWidth = 16.0;
    const long band = static_cast<long>(std::floor((switch_log_t_ - log_t) / kBandWidth));
    for (auto& [idx, table] : bands_)
        if (idx == band) return table->eval_log(log_t).log_value;

    const double band_hi = switch_log_t_ - kBandWidth * static_cast<double>(band);
    const double band_lo = band_hi - kBandWidth;
    // Size the table for the smaller of the density scales at the band edges,
    // so every point in the band gets at least rel_tol_ relative accuracy.
    const double log_scale = std::min(detail::log_density_bound(params_, band_lo),
                                      detail::log_density_bound(params_, band_hi));
    const double tol = std::max(1e-300, rel_tol_ * std::exp(std::min(600.0, log_scale)));
    auto table = std::make_unique<ContourTable>(
        params_, make_plan_log(params_, band_lo, band_hi, tol, 0.0));
    const double out = table->eval_log(log_t).log_value;
    bands_.emplace_back(band, std::move(table));
    return out;
}

std::vector<DensityValue> density_grid(const SemigroupParams& params, std::span<const double> ts,
                                       double target_abs_tol) {
    params.validate();
    std::vector<DensityValue> out(ts.size());
    if (ts.empty()) return out;

    if (params.c == 1.0 || params.c == 2.0) {
        for (std::size_t i = 0; i < ts.size(); ++i)
            out[i] = params.c == 1.0 ? density_c1(params, ts[i]) : density_c2(params, ts[i]);
        return out;
    }

    const double switch_ln = std::log(std::max(params.b, 2.0)) * params.a * params.c;
    double plain_lo = std::numeric_limits<double>::infinity();
    double plain_hi = 0.0;
    double tol = target_abs_tol;
    for (double t : ts) {
        require_positive(t, "density_grid: t");
        if (std::log(t) < switch_ln) {
            plain_lo = std::min(plain_lo, t);
            plain_hi = std::max(plain_hi, t);
            const double scale =
                std::exp(std::min(600.0, detail::log_density_bound(params, std::log(t))));
            tol = std::min(tol, std::max(1e-12, 1e-9 * scale));
        }
    }

    std::unique_ptr<ContourTable> table;
    if (plain_hi > 0.0)
        table = std::make_unique<ContourTable>(params, make_plan(params, plain_lo, plain_hi, tol));
    parallel_for(ts.size(), [&](std::size_t i) {
        if (std::log(ts[i]) >= switch_ln)
            out[i] = density_shifted(params, ts[i]);
        else
            out[i] = table->eval(ts[i]);
    });
    return out;
}

}  // namespace gammasg
