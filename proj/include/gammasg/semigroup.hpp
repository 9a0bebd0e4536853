#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gammasg/common.hpp"

namespace gammasg {

// Seeded draw from one of the semigroup laws. Streams are reproducible
// across platforms and worker counts: sample i is generated from its own
// splitmix64 substream keyed by (seed, i), so parallel generation and the
// multiplicative/additive correspondence are exact by construction.
struct SampleBatch {
    SemigroupParams params;
    std::uint64_t seed = 0;
    std::string generator;  // substream scheme id, recorded in output metadata
    std::vector<double> values;
};

// Exact sampler for c = 1: T = S^a with S ~ Gamma(b, 1)
// (Marsaglia-Tsang, with the shape boost for b < 1).
SampleBatch sample_tau_c1(double a, double b, std::size_t n, std::uint64_t seed);

// Integer c: componentwise product of c independent c = 1 draws.
SampleBatch sample_tau_integer_c(double a, double b, int c, std::size_t n, std::uint64_t seed);

// x = -log T for T from sample_tau_integer_c; the same substreams, so
// -log of the multiplicative batch reproduces this batch exactly.
SampleBatch sample_gumbel_root(double a, double b, int c, std::size_t n, std::uint64_t seed);

// Max over t_grid of |e_{c+d}(t) - int e_c(t/x) e_d(x) dx/x| with the inner
// product-convolution integral done adaptively in u = log x.
double convolution_check(const SemigroupParams& params_c, const SemigroupParams& params_d,
                         std::span<const double> t_grid);

namespace rng {

// splitmix64: counter-based, trivially splittable, 64-bit seeded.
std::uint64_t splitmix64_next(std::uint64_t& state);

struct Stream {
    std::uint64_t state;
    explicit Stream(std::uint64_t key) : state(key) {}
    double uniform();                 // (0, 1)
    double normal();                  // polar method
    double gamma_variate(double shape);  // Marsaglia-Tsang, any shape > 0
};

// Substream key for sample index i, factor j.
std::uint64_t substream_key(std::uint64_t seed, std::uint64_t sample, std::uint64_t factor);

}  // namespace rng

}  // namespace gammasg
