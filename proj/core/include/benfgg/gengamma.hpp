#pragma once

#include <cstdint>
#include <vector>

#include "benfgg/rng.hpp"

// The generalized gamma distribution with scale a, shape d and power p:
//   F(x) = P(d/p, (x/a)^p),   f(x) = (p / a^d) x^{d-1} e^{-(x/a)^p} / Gamma(d/p)
// for x > 0 and a, d, p > 0.  d = p gives a Weibull distribution and
// d = p = 1 an exponential.  The base B rides along because every consumer
// of these parameters also needs the digit base.

namespace benfgg {

struct GenGammaParams {
    double a = 1.0;  // scale
    double d = 1.0;  // shape
    double p = 1.0;  // power
    int base = 10;

    double shape() const { return d / p; }  // gamma shape of X^p up to scale

    // Throws std::domain_error naming the offending field.
    void validate() const;
};

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
    GenGammaParams params;
};

double pdf(double x, const GenGammaParams& params);
double cdf(double x, const GenGammaParams& params);

// Inverse cdf; quantile(0) returns 0 by convention although the support is
// open at 0.
double quantile(double q, const GenGammaParams& params);

// One draw from the standard gamma distribution with the given shape
// (Marsaglia & Tsang 2000).
double gamma_variate(SplitMix64& rng, double shape);

// n i.i.d. draws via X = a * G^{1/p}, G ~ Gamma(d/p, 1).  Deterministic
// under a fixed seed.
SampleBatch sample(std::size_t n, const GenGammaParams& params, std::uint64_t seed);

}  // namespace benfgg
