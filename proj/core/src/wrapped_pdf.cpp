#include "benfgg/wrapped_pdf.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "benfgg/specfun.hpp"

namespace benfgg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_u(double u) {
    if (!(u >= 0.0 && u <= 1.0))
        throw std::domain_error("wrapped pdf: u must lie in [0, 1]");
}

}  // namespace

std::int64_t min_terms(const GenGammaParams& params, double epsilon) {
    params.validate();
    if (!(epsilon > 0.0))
        throw std::domain_error("min_terms: epsilon must be > 0");
    const double t = (params.d + params.p) * std::log(double(params.base));
    const double x = t * t / (2.0 * std::numbers::pi * std::numbers::pi * epsilon) - 1.0;
    if (!(x >= 1.0)) return 1;
    const double m = std::floor(x) + 1.0;  // smallest integer strictly above x
    return m < 9.0e18 ? std::int64_t(m) : std::numeric_limits<std::int64_t>::max();
}

double fourier_truncation_bound(const GenGammaParams& params, std::int64_t terms) {
    params.validate();
    if (terms < 0) throw std::domain_error("fourier_truncation_bound: terms must be >= 0");
    const double t = (params.d + params.p) * std::log(double(params.base));
    return t * t / (2.0 * std::numbers::pi * std::numbers::pi * double(terms + 1));
}

WrappedDensityEval direct_pdf(double u, const GenGammaParams& params,
                              const DirectSumConfig& cfg) {
    params.validate();
    check_u(u);
    if (!(cfg.tail_tolerance > 0.0))
        throw std::domain_error("direct_pdf: tail_tolerance must be > 0");
    if (cfg.max_terms_each_side < 1)
        throw std::domain_error("direct_pdf: max_terms_each_side must be >= 1");

    const double ln_base = std::log(double(params.base));
    const double ln_a = std::log(params.a);
    const double shape = params.shape();
    const double ln_norm = std::log(params.p * ln_base) - ln_gamma_real(shape);

    // log of the k-th summand; w is ln(B^{k+u}/a)
    const auto ln_term = [&](double k) {
        const double w = (k + u) * ln_base - ln_a;
        return params.d * w - std::exp(params.p * w);
    };

    // the summand peaks where d*w = p*e^{p*w} steadies, i.e. w = ln(d/p)/p
    const long k0 = std::lround((std::log(shape) / params.p + ln_a) / ln_base - u);
    const double ln_peak = ln_term(double(k0));
    const double peak_scale = std::exp(ln_norm + ln_peak);
    const double scaled_tol = 0.5 * cfg.tail_tolerance / peak_scale;

    double sum = 1.0;  // peak term, in units of itself
    std::int64_t terms_used = 1;
    bool converged_right = false;
    bool converged_left = false;
    double tail_right = 0.0;
    double tail_left = 0.0;

    // rightward: double-exponential decay.  Past the peak the term ratio
    // exp(d lnB - (B^p - 1) e^{p w}) is < 1 and still falling, so the
    // remaining tail is below a geometric series started at the last term.
    for (int step = 1; step <= cfg.max_terms_each_side; ++step) {
        const double k = double(k0 + step);
        const double t = std::exp(ln_term(k) - ln_peak);
        sum += t;
        ++terms_used;
        const double w = (k + u) * ln_base - ln_a;
        const double ratio =
            std::exp(params.d * ln_base - std::expm1(params.p * ln_base) * std::exp(params.p * w));
        if (ratio < 1.0) {
            const double tail = t * ratio / (1.0 - ratio);
            if (tail <= scaled_tol) {
                tail_right = tail;
                converged_right = true;
                break;
            }
        }
    }

    // leftward: each summand is at most e^{d w}, and those fall off
    // geometrically with ratio B^{-d}
    const double left_ratio_den = -std::expm1(-params.d * ln_base);  // 1 - B^{-d}
    for (int step = 1; step <= cfg.max_terms_each_side; ++step) {
        const double k = double(k0 - step);
        sum += std::exp(ln_term(k) - ln_peak);
        ++terms_used;
        const double w_next = (k - 1.0 + u) * ln_base - ln_a;
        const double tail = std::exp(params.d * w_next - ln_peak) / left_ratio_den;
        if (tail <= scaled_tol) {
            tail_left = tail;
            converged_left = true;
            break;
        }
    }

    WrappedDensityEval out;
    out.u = u;
    out.method = WrappedMethod::direct;
    out.value = peak_scale * sum;
    out.terms_used = terms_used;
    out.converged = converged_right && converged_left;
    out.error_bound = out.converged
                          ? peak_scale * (tail_right + tail_left)
                          : std::numeric_limits<double>::max();
    return out;
}

FourierSeries::FourierSeries(const GenGammaParams& params, std::int64_t terms)
    : params_(params), terms_(terms) {
    params.validate();
    if (terms < 0) throw std::domain_error("FourierSeries: terms must be >= 0");

    const double ln_base = std::log(double(params.base));
    phase_offset_ = -std::log(params.a) / ln_base;

    const double shape = params.shape();
    const double lg = ln_gamma_real(shape);
    const double beta = kTwoPi / (params.p * ln_base);

    coeff_.reserve(std::size_t(std::min<std::int64_t>(terms, 1024)));
    for (std::int64_t k = 1; k <= terms; ++k) {
        const std::complex<double> lG =
            ln_gamma_complex({shape, -beta * double(k)});
        const double mag = 2.0 * std::exp(lG.real() - lg);
        // |Gamma| along the line falls monotonically with k: once one
        // coefficient underflows, every later one is zero too
        if (mag == 0.0) break;
        coeff_.emplace_back(mag * std::cos(lG.imag()), mag * std::sin(lG.imag()));
    }
}

FourierSeries FourierSeries::for_epsilon(const GenGammaParams& params, double epsilon) {
    return FourierSeries(params, min_terms(params, epsilon));
}

double FourierSeries::eval(double u) const {
    const double theta = kTwoPi * (u + phase_offset_);
    const std::complex<double> rot = std::polar(1.0, theta);
    std::complex<double> w = rot;
    double acc = 0.0;
    std::size_t k = 0;
    for (const auto& c : coeff_) {
        ++k;
        acc += w.real() * c.real() - w.imag() * c.imag();  // Re(w * c)
        w *= rot;
        if ((k & 255u) == 0) w = std::polar(1.0, theta * double(k + 1));
    }
    return 1.0 + acc;
}

WrappedDensityEval FourierSeries::evaluate(double u) const {
    check_u(u);
    WrappedDensityEval out;
    out.u = u;
    out.value = eval(u);
    out.method = WrappedMethod::fourier;
    out.error_bound = error_bound();
    out.converged = true;
    out.terms_used = terms_;
    return out;
}

double FourierSeries::term(std::int64_t k, double u) const {
    if (k < 1) throw std::domain_error("FourierSeries::term: k must be >= 1");
    if (std::size_t(k) > coeff_.size()) return 0.0;
    const std::complex<double> w = std::polar(1.0, kTwoPi * double(k) * (u + phase_offset_));
    const std::complex<double> c = coeff_[std::size_t(k) - 1];
    return w.real() * c.real() - w.imag() * c.imag();
}

double FourierSeries::coefficient_magnitude(std::int64_t k) const {
    if (k < 1) throw std::domain_error("FourierSeries::coefficient_magnitude: k must be >= 1");
    if (std::size_t(k) > coeff_.size()) return 0.0;
    return std::abs(coeff_[std::size_t(k) - 1]);
}

double FourierSeries::derivative_bound() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        acc += kTwoPi * double(i + 1) * std::abs(coeff_[i]);
    return acc;
}

double FourierSeries::residue_integral(double lo, double hi) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        const double k = double(i + 1);
        const std::complex<double> delta =
            std::polar(1.0, kTwoPi * k * (hi + phase_offset_)) -
            std::polar(1.0, kTwoPi * k * (lo + phase_offset_));
        acc += (coeff_[i] * delta / std::complex<double>(0.0, kTwoPi * k)).real();
    }
    return acc;
}

WrappedDensityEval fourier_pdf(double u, const GenGammaParams& params,
                               const FourierConfig& cfg) {
    return FourierSeries(params, cfg.terms).evaluate(u);
}

double fourier_term(std::int64_t k, double u, const GenGammaParams& params) {
    params.validate();
    if (k < 1) throw std::domain_error("fourier_term: k must be >= 1");
    const double ln_base = std::log(double(params.base));
    const double shape = params.shape();
    const std::complex<double> lG =
        ln_gamma_complex({shape, -kTwoPi * double(k) / (params.p * ln_base)});
    const double mag = 2.0 * std::exp(lG.real() - ln_gamma_real(shape));
    const double theta = kTwoPi * double(k) * (u - std::log(params.a) / ln_base);
    return mag * std::cos(theta + lG.imag());
}

}  // namespace benfgg
