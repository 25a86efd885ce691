#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "benfgg/gengamma.hpp"

// The density of log_B X mod 1 for a generalized gamma X, in its two
// equivalent closed forms:
//
//   direct:   f(u) = (p ln B / Gamma(d/p)) sum_k exp(-(B^{k+u}/a)^p) (B^{k+u}/a)^d
//   Fourier:  f(u) = 1 + (2 / Gamma(d/p)) sum_{k>=1}
//                        Re[ e^{2 pi i k (u - log_B a)} Gamma(d/p - 2 pi k i / (p ln B)) ]
//
// The Fourier form truncated after M terms is within
// ((d+p) ln B)^2 / (2 pi^2 (M+1)) of f everywhere, which is what makes the
// deviation-from-Benford bound computable.  Here f measures how far the
// significand law sits from Benford: f identically 1 means exactly Benford.

namespace benfgg {

struct DirectSumConfig {
    double tail_tolerance = 1e-12;   // absolute, on the density value
    int max_terms_each_side = 2000;
};

struct FourierConfig {
    std::int64_t terms = 1;  // M; 0 is allowed as the degenerate constant-1 series
    double epsilon = 0.0;    // the pointwise bound terms was derived from, if any
};

enum class WrappedMethod { direct, fourier };

struct WrappedDensityEval {
    double u = 0.0;
    double value = 0.0;
    WrappedMethod method = WrappedMethod::direct;
    double error_bound = 0.0;
    bool converged = true;
    std::int64_t terms_used = 0;
};

// Smallest M with M > ((d+p) ln B)^2 / (2 pi^2 epsilon) - 1, at least 1.
std::int64_t min_terms(const GenGammaParams& params, double epsilon);

// ((d+p) ln B)^2 / (2 pi^2 (terms+1)): pointwise bound on the dropped tail.
double fourier_truncation_bound(const GenGammaParams& params, std::int64_t terms);

// Bilateral sum evaluated outward from its peak term, each side stopped by
// a certified geometric tail bound.  u in [0, 1] (endpoints by continuity).
WrappedDensityEval direct_pdf(double u, const GenGammaParams& params,
                              const DirectSumConfig& cfg = {});

// M-term Fourier partial sum with the gamma coefficients cached per
// parameter set; evaluations per u are then O(M) multiply-adds.
class FourierSeries {
public:
    FourierSeries(const GenGammaParams& params, std::int64_t terms);

    static FourierSeries for_epsilon(const GenGammaParams& params, double epsilon);

    double eval(double u) const;                  // f_M(u), any real u
    WrappedDensityEval evaluate(double u) const;  // validated, with metadata

    // k-th residue term at u; 0 once the coefficient underflows.
    double term(std::int64_t k, double u) const;

    // |c_k| = (2/Gamma(d/p)) |Gamma(d/p - 2 pi k i/(p ln B))|
    double coefficient_magnitude(std::int64_t k) const;

    // sum_k 2 pi k |c_k|, a bound on |f_M'|
    double derivative_bound() const;

    // exact integral of (f_M - 1) over [lo, hi]
    double residue_integral(double lo, double hi) const;

    std::int64_t terms() const { return terms_; }
    double error_bound() const { return fourier_truncation_bound(params_, terms_); }
    const GenGammaParams& params() const { return params_; }

private:
    GenGammaParams params_;
    std::int64_t terms_;
    double phase_offset_;                      // -log_B a
    std::vector<std::complex<double>> coeff_;  // trimmed at underflow
};

WrappedDensityEval fourier_pdf(double u, const GenGammaParams& params,
                               const FourierConfig& cfg);

// k-th residue term computed from scratch (no cache)
double fourier_term(std::int64_t k, double u, const GenGammaParams& params);

}  // namespace benfgg
