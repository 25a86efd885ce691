#pragma once

#include <complex>

// Special-function kernels: real/complex log-gamma, the regularized lower
// incomplete gamma function and its inverse, and a truncated-product oracle
// for the modulus of the gamma function along vertical lines.

namespace benfgg {

// Configuration for abs_gamma_product.  The product
//   |Gamma(a+bi)|^2 = |Gamma(a)|^2 * prod_{k>=0} 1 / (1 + b^2/(a+k)^2)
// is truncated after product_terms factors; truncation error is O(1/L).
// tail_correction applies a first-order estimate of the dropped tail.
struct GammaModulusOracleConfig {
    long product_terms = 100000;
    bool tail_correction = false;
};

// ln Gamma(x) for x > 0.  Throws std::domain_error otherwise.
double ln_gamma_real(double x);

// Principal log Gamma(z) for Re z > 0.
std::complex<double> ln_gamma_complex(std::complex<double> z);

// Gamma(z) for Re z > 0, evaluated as exp(ln_gamma_complex(z)).
std::complex<double> gamma_complex(std::complex<double> z);

// Truncated-product |Gamma(re + im*i)|.  Cross-check for gamma_complex,
// not a production path.
double abs_gamma_product(double re, double im,
                         const GammaModulusOracleConfig& cfg = {});

// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s),
// for s > 0 and x >= 0.  Monotone in x, P(s, 0) = 0, P(s, inf) = 1.
double reg_lower_incomplete_gamma(double s, double x);

// Inverse of P(s, .): the x >= 0 with P(s, x) = q, for q in [0, 1).
double inv_reg_lower_incomplete_gamma(double s, double q);

}  // namespace benfgg
