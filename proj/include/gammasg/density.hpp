#pragma once

#include <complex>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "gammasg/common.hpp"
#include "gammasg/specfun.hpp"

namespace gammasg {

// Quadrature configuration for the oscillatory inversion integral
//   e_c(a,b)(t) = (1/2pi) int t^{ix-1} [Gamma(b - iax)/Gamma(b)]^c dx,
// optionally moved to the horizontal contour Im z = contour_delta
// (valid for contour_delta > -b/a).
struct InversionPlan {
    double contour_delta = 0.0;
    double truncation_x = 0.0;   // integrate x in [-truncation_x, truncation_x]
    int node_count = 0;          // odd, symmetric grid
    double target_abs_tol = 1e-10;

    void validate(const SemigroupParams& p) const;
};

enum class DensityMethod { closed_form_c1, closed_form_c2, inversion, shifted_inversion };

struct DensityValue {
    double t = 0.0;
    double value = 0.0;        // may underflow to 0 in deep tails
    double est_abs_err = 0.0;
    DensityMethod method = DensityMethod::inversion;
    double log_value = 0.0;    // natural log of the density; -inf when value is 0
};

const char* to_string(DensityMethod m);

// Builds a plan covering every t in [t_lo, t_hi]: node spacing resolves the
// oscillation t^{ix} at >= 8 samples per period and keeps trapezoid aliasing
// below tolerance; truncation_x is where the |Gamma|^c envelope falls below
// target_abs_tol/10 (scaled by the t prefactor).
InversionPlan make_plan(const SemigroupParams& params, double t_lo, double t_hi,
                        double target_abs_tol = 1e-10, double contour_delta = 0.0);

// Precomputed contour samples [Gamma(b + a*delta - i a x_j)/Gamma(b)]^c for a
// fixed plan; eval(t) is then a single oscillatory sum. Immutable after
// construction and safe to share across threads.
class ContourTable {
  public:
    ContourTable(const SemigroupParams& params, const InversionPlan& plan);

    DensityValue eval(double t) const;
    // Same evaluation addressed by log t; usable when t itself would
    // underflow or overflow a double.
    DensityValue eval_log(double log_t) const;

    const InversionPlan& plan() const { return plan_; }
    double max_phase_step() const { return max_phase_step_; }

  private:
    SemigroupParams params_;
    InversionPlan plan_;
    double beff_;              // b + a * delta
    double h_;
    std::vector<std::complex<double>> nodes_;  // j = 0..M (conjugate symmetry)
    double abs_sum_ = 0.0;     // sum |nodes| for the round-off estimate
    double tail_rate_ = 0.0;   // pi*a*c/2
    double tail_coeff_ = 0.0;  // envelope prefactor at truncation
    double max_phase_step_ = 0.0;
};

// Exact closed forms.
DensityValue density_c1(const SemigroupParams& params, double t);  // requires c == 1
DensityValue density_c2(const SemigroupParams& params, double t);  // requires c == 2

// Contour integral along Im z = plan.contour_delta.
DensityValue density_inversion(const SemigroupParams& params, double t,
                               const InversionPlan& plan);

// Saddle-normalised representation: the contour is moved to the height where
// the Gamma argument becomes T = t^{1/(ac)}, Binet's formula factors out the
// exponentially small scale exp(-c T), and the remaining integrand
// exp(c T f(u)) (1-iu)^{-c/2} exp(c mu(T(1-iu))) is order one. Exact (up to
// quadrature) whenever T >= b; the preferred route for large t.
DensityValue density_shifted(const SemigroupParams& params, double t,
                             double target_rel_tol = 1e-9);

// Dispatcher: closed form when c is exactly 1 or 2, shifted inversion when
// t^{1/(ac)} >= max(b, 2), plain inversion otherwise.
DensityValue density(const SemigroupParams& params, double t);

// Dispatcher over a grid, sharing one contour table across the plain-inversion
// points. Output order matches the input order.
std::vector<DensityValue> density_grid(const SemigroupParams& params,
                                       std::span<const double> ts,
                                       double target_abs_tol = 1e-10);

// Evaluator for repeated density calls across a wide range of t, as arise in
// quadratures against the density. Closed forms and the shifted route are
// used where they apply; the plain-inversion region is covered by contour
// tables built lazily per band of log t, so nearby evaluations share nodes.
// One instance is NOT thread-safe; create one per thread.
class BandedDensityEvaluator {
  public:
    explicit BandedDensityEvaluator(const SemigroupParams& params, double rel_tol = 1e-11);

    // log e_c(a,b)(t) at t = exp(log_t); -inf when the density underflows.
    double log_density(double log_t);

  private:
    SemigroupParams params_;
    double rel_tol_;
    double switch_log_t_;  // above this, the shifted route
    std::vector<std::pair<long, std::unique_ptr<ContourTable>>> bands_;
};

namespace detail {
// log of the origin envelope bound ~ t^{b/a-1} log(1/t)^{c-1} * const (t < 1)
// and of the tail envelope; used by integrators to pick truncation points.
double log_density_bound(const SemigroupParams& params, double log_t);
}  // namespace detail

}  // namespace gammasg
