#include "benfgg/gengamma.hpp"

#include <cmath>
#include <stdexcept>

#include "benfgg/specfun.hpp"

namespace benfgg {

void GenGammaParams::validate() const {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::domain_error("GenGammaParams: a must be finite and > 0");
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::domain_error("GenGammaParams: d must be finite and > 0");
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::domain_error("GenGammaParams: p must be finite and > 0");
    if (base < 2)
        throw std::domain_error("GenGammaParams: base must be an integer >= 2");
}

double pdf(double x, const GenGammaParams& params) {
    params.validate();
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("pdf: x must be finite and > 0");
    const double log_pdf = std::log(params.p) - params.d * std::log(params.a) +
                           (params.d - 1.0) * std::log(x) -
                           std::pow(x / params.a, params.p) -
                           ln_gamma_real(params.shape());
    return std::exp(log_pdf);
}

double cdf(double x, const GenGammaParams& params) {
    params.validate();
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("cdf: x must be finite and > 0");
    return reg_lower_incomplete_gamma(params.shape(), std::pow(x / params.a, params.p));
}

double quantile(double q, const GenGammaParams& params) {
    params.validate();
    if (!(q >= 0.0 && q < 1.0))
        throw std::domain_error("quantile: q must lie in [0, 1)");
    if (q == 0.0) return 0.0;
    const double g = inv_reg_lower_incomplete_gamma(params.shape(), q);
    return params.a * std::pow(g, 1.0 / params.p);
}

double gamma_variate(SplitMix64& rng, double shape) {
    if (!(shape > 0.0) || !std::isfinite(shape))
        throw std::domain_error("gamma_variate: shape must be finite and > 0");
    if (shape < 1.0) {
        const double g = gamma_variate(rng, shape + 1.0);
        return g * std::pow(rng.next_u01_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_u01_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

SampleBatch sample(std::size_t n, const GenGammaParams& params, std::uint64_t seed) {
    params.validate();
    if (n < 1) throw std::domain_error("sample: n must be >= 1");

    SampleBatch batch;
    batch.seed = seed;
    batch.params = params;
    batch.values.resize(n);

    SplitMix64 rng(seed);
    const double shape = params.shape();
    const double inv_p = 1.0 / params.p;
    for (std::size_t i = 0; i < n; ++i)
        batch.values[i] = params.a * std::pow(gamma_variate(rng, shape), inv_p);
    return batch;
}

}  // namespace benfgg
