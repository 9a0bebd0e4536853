#pragma once

#include <vector>

#include "gammasg/common.hpp"

namespace gammasg {

// Moment sequence s_n = [Gamma(a n + b)/Gamma(b)]^c, n = 0..N, kept both
// linearly (may overflow for large n) and in the log domain.
struct MomentSequence {
    SemigroupParams params;
    std::vector<double> values;
    std::vector<double> log_values;
};

// log s_n; never overflows for n <= 10^6.
double log_moment(const SemigroupParams& params, long n);

// s_n itself; overflow_error when the linear value exceeds double range.
double moment(const SemigroupParams& params, long n);

MomentSequence moment_sequence(const SemigroupParams& params, int n_max);

// Moment-problem classification on the half-line: unique representing
// measure iff a*c <= 2, independent of b. boundary marks a*c == 2 exactly
// (in double arithmetic on the inputs).
struct DeterminacyVerdict {
    bool determinate = true;
    bool boundary = false;
};

DeterminacyVerdict classify(const SemigroupParams& params);

// Terms T_n = s_n^{-c/(2n)} behave like (e/(na))^{ac/2}; the series sum T_n
// diverges iff ac <= 2. A finite computation cannot prove divergence, so the
// diagnostic reports the partial sums and the fitted decay exponent of the
// terms (least squares over the top decade; expected ~ -ac/2).
struct CarlemanDiagnostic {
    std::vector<double> partial_sums;  // S_1..S_N
    double fitted_exponent = 0.0;
};

CarlemanDiagnostic carleman_diagnostic(const SemigroupParams& params, long n_terms);

// Truncated integral int_K^T log e_c(t^2) / (1+t^2) dt, evaluated with the
// tail form of log e_c (whose dominant term is -c t^{2/(ac)}). Bounded as
// T -> inf iff 2/(ac) < 1, i.e. iff the moment problem is indeterminate.
struct KreinDiagnostic {
    double integral_estimate = 0.0;
    double exponent = 0.0;          // 2/(ac)
    bool bounded_at_infinity = false;
};

KreinDiagnostic krein_diagnostic(const SemigroupParams& params, double k_lo, double t_hi);

// Quadrature route for s_n: integrates t^n e_c(a,b)(t) dt through u = log t
// with the density evaluators. Independent of the closed Gamma-ratio form,
// so the two can be compared. n is capped at 12.
double moment_by_quadrature(const SemigroupParams& params, int n, double rel_tol = 1e-6);

}  // namespace gammasg
