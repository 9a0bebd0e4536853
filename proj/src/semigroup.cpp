#include "gammasg/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gammasg/density.hpp"
#include "gammasg/parallel.hpp"
#include "gammasg/quadrature.hpp"

namespace gammasg {

namespace rng {

std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t substream_key(std::uint64_t seed, std::uint64_t sample, std::uint64_t factor) {
    // One extra mix round decorrelates neighbouring keys.
    std::uint64_t s = seed ^ (sample * 0xd1342543de82ef95ULL) ^ (factor * 0xaf251af3b0f025b5ULL);
    return splitmix64_next(s);
}

double Stream::uniform() {
    // 53-bit mantissa, strictly inside (0, 1).
    return (static_cast<double>(splitmix64_next(state) >> 11) + 0.5) * 0x1.0p-53;
}

double Stream::normal() {
    for (;;) {
        const double x1 = 2.0 * uniform() - 1.0;
        const double x2 = 2.0 * uniform() - 1.0;
        const double r2 = x1 * x1 + x2 * x2;
        if (r2 > 0.0 && r2 < 1.0) return x1 * std::sqrt(-2.0 * std::log(r2) / r2);
    }
}

double Stream::gamma_variate(double shape) {
    if (!(shape > 0.0)) throw domain_error("gamma_variate: shape must be > 0");
    if (shape < 1.0) {
        // Shape boost: X_{s} = X_{s+1} * U^{1/s}.
        const double boosted = gamma_variate(shape + 1.0);
        return boosted * std::pow(uniform(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace rng

namespace {

constexpr const char* kGeneratorId = "splitmix64/per-sample-substream/marsaglia-tsang";

double draw_tau_product(double a, double b, int c, std::uint64_t seed, std::uint64_t i) {
    double t = 1.0;
    for (int j = 0; j < c; ++j) {
        rng::Stream stream(rng::substream_key(seed, i, static_cast<std::uint64_t>(j)));
        t *= std::pow(stream.gamma_variate(b), a);
    }
    // S^a can underflow for tiny shapes; keep the all-positive invariant.
    return std::max(t, std::numeric_limits<double>::min());
}

}  // namespace

SampleBatch sample_tau_c1(double a, double b, std::size_t n, std::uint64_t seed) {
    return sample_tau_integer_c(a, b, 1, n, seed);
}

SampleBatch sample_tau_integer_c(double a, double b, int c, std::size_t n, std::uint64_t seed) {
    require_positive(a, "sample_tau_integer_c: a");
    require_positive(b, "sample_tau_integer_c: b");
    if (c < 1) throw domain_error("sample_tau_integer_c: c must be a positive integer");
    if (n < 1) throw domain_error("sample_tau_integer_c: n must be >= 1");
    SampleBatch batch;
    batch.params = SemigroupParams{a, b, static_cast<double>(c)};
    batch.seed = seed;
    batch.generator = kGeneratorId;
    batch.values.resize(n);
    parallel_for(n, [&](std::size_t i) {
        batch.values[i] = draw_tau_product(a, b, c, seed, static_cast<std::uint64_t>(i));
    });
    return batch;
}

SampleBatch sample_gumbel_root(double a, double b, int c, std::size_t n, std::uint64_t seed) {
    SampleBatch batch = sample_tau_integer_c(a, b, c, n, seed);
    for (double& v : batch.values) v = -std::log(v);
    return batch;
}

double convolution_check(const SemigroupParams& params_c, const SemigroupParams& params_d,
                         std::span<const double> t_grid) {
    params_c.validate();
    params_d.validate();
    if (params_c.a != params_d.a || params_c.b != params_d.b)
        throw domain_error("convolution_check: the two laws must share (a, b)");
    if (t_grid.empty()) throw domain_error("convolution_check: empty grid");

    SemigroupParams sum_params = params_c;
    sum_params.c = params_c.c + params_d.c;

    BandedDensityEvaluator eval_c(params_c);
    BandedDensityEvaluator eval_d(params_d);

    double max_residual = 0.0;
    for (double t : t_grid) {
        require_positive(t, "convolution_check: t");
        const double lnt = std::log(t);

        // integrand(u) = e_c(t e^{-u}) e_d(e^u); both factors decay
        // double-exponentially, so widen the window until the endpoint
        // bounds drop below tolerance.
        auto log_bound = [&](double u) {
            return detail::log_density_bound(params_c, lnt - u) +
                   detail::log_density_bound(params_d, u);
        };
        double lo = -2.0, hi = 2.0;
        while (log_bound(lo) > -40.0 && lo > -400.0) lo -= 1.0;
        while (log_bound(hi) > -40.0 && hi < 400.0) hi += 1.0;

        auto f = [&](double u) {
            return std::exp(eval_c.log_density(lnt - u) + eval_d.log_density(u));
        };
        const QuadResult q = integrate(f, lo, hi, 1e-9, 1e-8);
        if (q.abs_err > 1e-6)
            throw accuracy_error("convolution_check: inner quadrature failed to converge");
        max_residual = std::max(max_residual, std::abs(q.value - density(sum_params, t).value));
    }
    return max_residual;
}

}  // namespace gammasg
