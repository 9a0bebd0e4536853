#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gammasg/asympt.hpp"
#include "gammasg/density.hpp"
#include "gammasg/specfun.hpp"

using namespace gammasg;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return out;
}
}  // namespace

TEST_CASE("tail formula collapses to the c=1 closed form") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> ua(0.3, 3.0), ub(0.3, 4.0), ut(1.5, 50.0);
    for (int i = 0; i < 20; ++i) {
        const SemigroupParams p{ua(gen), ub(gen), 1.0};
        const double t = ut(gen);
        CHECK(tail_asymptotic(p, t).log_leading ==
              doctest::Approx(density_c1(p, t).log_value).epsilon(1e-13));
    }
}

TEST_CASE("tail formula at a=b=1 reduces to the known one-parameter form") {
    // (2pi)^{(c-1)/2} c^{-1/2} exp(-c t^{1/c}) t^{-(c-1)/(2c)}
    for (double c : {0.7, 1.5, 2.0, 3.0}) {
        for (double t : {5.0, 40.0, 1e3}) {
            const double expect = 0.5 * (c - 1.0) * std::log(2.0 * kPi) - 0.5 * std::log(c) -
                                  c * std::pow(t, 1.0 / c) -
                                  (c - 1.0) / (2.0 * c) * std::log(t);
            CHECK(tail_asymptotic({1, 1, c}, t).log_leading ==
                  doctest::Approx(expect).epsilon(1e-12));
        }
    }
}

TEST_CASE("tail ratio against the K0 closed form at c=2") {
    const SemigroupParams p{1, 1, 2};
    const double ratio =
        std::exp(density_c2(p, 1e6).log_value - tail_asymptotic(p, 1e6).log_leading);
    CHECK(ratio > 0.95);
    CHECK(ratio < 1.05);
    CHECK_THROWS_AS(tail_asymptotic(p, 0.5), domain_error);
}

TEST_CASE("tail ratio trends to one for non-closed-form c") {
    for (double c : {1.5, 2.0, 3.0}) {
        const SemigroupParams p{1.0, 1.0, c};
        double prev_dev = 1e9;
        for (double t : {1e2, 1e4, 1e6}) {
            const double dev = std::abs(
                std::exp(density(p, t).log_value - tail_asymptotic(p, t).log_leading) - 1.0);
            CHECK(dev < prev_dev + 1e-9);
            prev_dev = dev;
        }
        CHECK(prev_dev < 0.01);
    }
}

TEST_CASE("origin formula values") {
    // c=1, b/a=1: the leading term is exactly 1/(a Gamma(b)) * t^0.
    CHECK(origin_asymptotic({1, 1, 1}, 0.1).leading_term == doctest::Approx(1.0).epsilon(1e-13));
    // direct substitution at (a=2, b=1, c=1): t^{-1/2}/2 at t = 0.01 -> 5.
    CHECK(origin_asymptotic({2, 1, 1}, 0.01).leading_term == doctest::Approx(5.0).epsilon(1e-13));
    CHECK_THROWS_AS(origin_asymptotic({1, 1, 1}, 1.5), domain_error);
    CHECK_THROWS_AS(origin_asymptotic({1, 1, 1}, 0.0), domain_error);
}

TEST_CASE("origin ratio approaches one as t -> 0") {
    for (double c : {0.5, 1.5, 2.0, 3.0}) {
        const SemigroupParams p{1.0, 1.0, c};
        double prev_dev = 1e9;
        for (int k : {2, 5, 8}) {
            const double t = std::pow(10.0, -k);
            const double dev = std::abs(
                std::exp(density(p, t).log_value - origin_asymptotic(p, t).log_leading) - 1.0);
            CHECK(dev < prev_dev + 1e-9);
            prev_dev = dev;
        }
        // O(1/log(1/t)) with a c-dependent constant; ~3/log(1e8) at c = 3.
        CHECK(prev_dev < 0.25);
    }
}

TEST_CASE("origin formula matches the K0 small-argument expansion at c=2") {
    // 2 K0(2 sqrt(t)) = log(1/t) - 2*euler + O(t log t): the leading term of
    // the origin formula is log(1/t), off by the O(1) constant.
    const SemigroupParams p{1, 1, 2};
    const double t = 1e-10;
    const double lam = -std::log(t);
    CHECK(density_c2(p, t).value ==
          doctest::Approx(lam - 2.0 * std::numbers::egamma).epsilon(1e-8));
    CHECK(origin_asymptotic(p, t).leading_term == doctest::Approx(lam).epsilon(1e-13));
}

TEST_CASE("limit behaviour classification") {
    CHECK(limit_behavior({1, 2, 1}) == OriginLimit::to_zero);
    CHECK(limit_behavior({2, 1, 1}) == OriginLimit::to_infinity);
    CHECK(limit_behavior({1, 1, 3}) == OriginLimit::to_infinity);
    CHECK(limit_behavior({1, 1, 0.5}) == OriginLimit::zero_iff_c_below_one);
    CHECK(limit_behavior({1, 1, 1}) == OriginLimit::zero_iff_c_below_one);
    CHECK(limit_behavior({2, 2, 3}) == OriginLimit::to_infinity);
}

TEST_CASE("fitted error order in the tail regime") {
    const double slope = verify_order({1, 1, 2}, Regime::tail, log_spaced(1e2, 1e6, 9));
    CHECK(slope == doctest::Approx(-0.5).epsilon(0.6));
    CHECK(std::abs(slope + 0.5) < 0.3);
}

TEST_CASE("fitted error order in the origin regime") {
    // error/leading ~ 1/log(1/t): slope ~ -1 against log log(1/t).
    const double slope = verify_order({1, 1, 2}, Regime::origin,
                                      log_spaced(1e-8, 1e-2, 7));
    CHECK(std::abs(slope + 1.0) < 0.3);
}

TEST_CASE("verify_order handles the exact-collapse case and rejects bad grids") {
    // c=1: relative error identically ~ 0; the fit degenerates to ~0 slope.
    const double slope = verify_order({1, 1, 1}, Regime::tail, log_spaced(1e2, 1e6, 6));
    CHECK(std::abs(slope) < 0.5);
    std::vector<double> tiny = {2.0, 3.0, 4.0, 5.0};
    CHECK_THROWS_AS(verify_order({1, 1, 2}, Regime::tail, tiny), grid_error);
    std::vector<double> few = {10.0, 1e5};
    CHECK_THROWS_AS(verify_order({1, 1, 2}, Regime::tail, few), grid_error);
}
