#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "benfgg/analysis.hpp"
#include "benfgg/gengamma.hpp"
#include "benfgg/quadrature.hpp"
#include "benfgg/specfun.hpp"

using namespace benfgg;

namespace {

// a = 1, d and p over {0.5, 1, 2}
std::vector<GenGammaParams> nine_triples() {
    std::vector<GenGammaParams> out;
    for (double d : {0.5, 1.0, 2.0})
        for (double p : {0.5, 1.0, 2.0})
            out.push_back({1.0, d, p, 10});
    return out;
}

}  // namespace

TEST_CASE("pdf reduces to the exponential density") {
    CHECK(pdf(2.0, {2.0, 1.0, 1.0, 10}) ==
          doctest::Approx(std::exp(-1.0) / 2.0).epsilon(1e-13));
    CHECK(pdf(1.0, {1.0, 1.0, 1.0, 10}) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
}

TEST_CASE("pdf by direct substitution at d = p = 1/2") {
    // (p/a^d) x^{d-1} e^{-(x/a)^p} / Gamma(d/p) at x = a = 1: 0.5 e^{-1}
    CHECK(pdf(1.0, {1.0, 0.5, 0.5, 10}) ==
          doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-13));
    // and the density carries unit mass
    const GenGammaParams params{1.0, 0.5, 0.5, 10};
    const double x_max = quantile(1.0 - 1e-10, params);
    const auto q = integrate_adaptive(
        [&](double x) { return pdf(x, params); }, 1e-300, x_max, 1e-10, 1e-10);
    CHECK(std::fabs(q.value - 1.0) < 1e-6);
}

TEST_CASE("pdf domain errors") {
    CHECK_THROWS_AS(pdf(0.0, {1.0, 1.0, 1.0, 10}), std::domain_error);
    CHECK_THROWS_AS(pdf(-1.0, {1.0, 1.0, 1.0, 10}), std::domain_error);
}

TEST_CASE("parameter validation names the offending field") {
    const auto message_of = [](GenGammaParams params) {
        try {
            params.validate();
        } catch (const std::domain_error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message_of({-1.0, 1.0, 1.0, 10}).find(" a ") != std::string::npos);
    CHECK(message_of({1.0, 0.0, 1.0, 10}).find(" d ") != std::string::npos);
    CHECK(message_of({1.0, 1.0, -2.0, 10}).find(" p ") != std::string::npos);
    CHECK(message_of({1.0, 1.0, 1.0, 1}).find("base") != std::string::npos);
}

TEST_CASE("cdf reduces to the exponential cdf") {
    CHECK(cdf(2.0, {2.0, 1.0, 1.0, 10}) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
    CHECK(cdf(1e-290, {1.0, 1.0, 1.0, 10}) < 1e-280);
}

TEST_CASE("cdf at x = a for the Weibull case") {
    // d = p: F(a) = P(1, 1) = 1 - e^{-1}
    for (double dp : {0.3, 1.0, 2.5})
        for (double a : {0.5, 1.0, 7.0})
            CHECK(cdf(a, {a, dp, dp, 10}) ==
                  doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
}

TEST_CASE("Weibull reduction of the cdf") {
    for (double dp : {0.4, 0.9, 1.7})
        for (double a : {0.5, 2.0}) {
            const GenGammaParams params{a, dp, dp, 10};
            for (double x : {0.1, 0.5, 1.0, 2.0, 5.0}) {
                const double weibull = -std::expm1(-std::pow(x / a, dp));
                CHECK(std::fabs(cdf(x, params) - weibull) <= 1e-12);
            }
        }
}

TEST_CASE("cdf/pdf consistency by finite differences") {
    for (const auto& params : nine_triples()) {
        for (double q : {0.2, 0.5, 0.8}) {
            const double x = quantile(q, params);
            const double h = 1e-4 * x;
            const double fd = (cdf(x + h, params) - cdf(x - h, params)) / (2.0 * h);
            CHECK(std::fabs(fd - pdf(x, params)) <= 1e-5 * pdf(x, params));
        }
    }
}

TEST_CASE("normalization over nine parameter triples") {
    for (const auto& params : nine_triples()) {
        const double x_max = quantile(1.0 - 1e-10, params);
        const auto q = integrate_adaptive(
            [&](double x) { return pdf(x, params); }, 1e-300, x_max, 1e-10, 1e-10);
        CHECK(std::fabs(q.value - 1.0) < 1e-6);
    }
}

TEST_CASE("quantile basics") {
    CHECK(quantile(1.0 - std::exp(-1.0), {1.0, 1.0, 1.0, 10}) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(quantile(0.0, {1.0, 2.0, 0.5, 10}) == 0.0);
    CHECK_THROWS_AS(quantile(1.0, {1.0, 1.0, 1.0, 10}), std::domain_error);
    CHECK_THROWS_AS(quantile(-0.2, {1.0, 1.0, 1.0, 10}), std::domain_error);

    // a * inv_P(d/p, 1/2)^{1/p} at (a=2, d=1, p=1/2)
    const GenGammaParams params{2.0, 1.0, 0.5, 10};
    const double want = 2.0 * std::pow(inv_reg_lower_incomplete_gamma(2.0, 0.5), 2.0);
    CHECK(quantile(0.5, params) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("quantile round-trips the cdf and is increasing") {
    for (const auto& params : nine_triples()) {
        double prev = 0.0;
        for (int i = 1; i <= 19; ++i) {
            const double q = double(i) / 20.0;
            const double x = quantile(q, params);
            CHECK(x > prev);
            CHECK(std::fabs(cdf(x, params) - q) < 1e-9);
            prev = x;
        }
    }
}

TEST_CASE("sampling is deterministic under a fixed seed") {
    const GenGammaParams params{2.0, 1.0, 0.5, 10};
    const auto one = sample(5, params, 42);
    const auto two = sample(5, params, 42);
    REQUIRE(one.values.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(one.values[i] == two.values[i]);
    for (double v : one.values) CHECK(v > 0.0);
    CHECK(one.seed == 42);

    const auto other = sample(5, params, 43);
    CHECK(one.values[0] != other.values[0]);
}

TEST_CASE("sample moments match the gamma construction") {
    // X^p is Gamma(d/p, a^p): mean a^p * d/p
    const GenGammaParams params{2.0, 1.0, 0.5, 10};
    const std::size_t n = 1000000;
    const auto batch = sample(n, params, 7);
    double mean = 0.0, m2 = 0.0;
    for (double x : batch.values) {
        const double y = std::pow(x, params.p);
        mean += y;
        m2 += y * y;
    }
    mean /= double(n);
    m2 /= double(n);
    const double se = std::sqrt((m2 - mean * mean) / double(n));
    const double want = std::pow(params.a, params.p) * params.shape();
    CHECK(std::fabs(mean - want) < 3.0 * se);
}

TEST_CASE("sample mean of the unit exponential") {
    const std::size_t n = 1000000;
    const auto batch = sample(n, {1.0, 1.0, 1.0, 10}, 11);
    const double mean =
        std::accumulate(batch.values.begin(), batch.values.end(), 0.0) / double(n);
    CHECK(std::fabs(mean - 1.0) < 3.0 / std::sqrt(double(n)));
}

TEST_CASE("sampler follows the implemented law (KS)") {
    const GenGammaParams params{1.0, 0.8, 0.6, 10};
    const std::size_t n = 10000;
    int ok = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto batch = sample(n, params, seed);
        std::vector<double> unit(n);
        for (std::size_t i = 0; i < n; ++i) {
            unit[i] = cdf(batch.values[i], params);
            if (unit[i] >= 1.0) unit[i] = std::nextafter(1.0, 0.0);
        }
        if (ks_statistic(unit) < 1.63 / std::sqrt(double(n))) ++ok;
    }
    CHECK(ok >= 9);
}

TEST_CASE("sample validation") {
    CHECK_THROWS_AS(sample(0, {1.0, 1.0, 1.0, 10}, 1), std::domain_error);
    CHECK_THROWS_AS(sample(10, {0.0, 1.0, 1.0, 10}, 1), std::domain_error);
}
