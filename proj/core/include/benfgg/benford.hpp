#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Benford primitives: significand / mantissa / leading digit of a real
// number in an integer base B >= 2, the Benford digit probabilities
// log_B((d+1)/d), digit histograms, and the sum-of-squared-errors score.

namespace benfgg {

struct SignificandDecomposition {
    double significand = 1.0;  // in [1, B)
    int exponent = 0;          // |x| = significand * B^exponent
};

struct DigitHistogram {
    int base = 10;
    std::vector<std::uint64_t> counts;  // counts[i] is the count of digit i+1
    std::uint64_t total = 0;
};

// |x| = s * B^n with s in [1, B).  x must be nonzero.
SignificandDecomposition significand(double x, int base);

// log_B x mod 1, in [0, 1).  x must be > 0.
double mantissa(double x, int base);

// floor of the significand, in 1 .. B-1.  x must be nonzero.
int leading_digit(double x, int base);

// log_B((digit + 1) / digit)
double benford_digit_prob(int digit, int base);

DigitHistogram digit_histogram(std::span<const double> values, int base);

// Concatenation of two batches.
DigitHistogram merge(const DigitHistogram& lhs, const DigitHistogram& rhs);

// sum_d (counts[d]/total - benford_digit_prob(d))^2
double sse_error(const DigitHistogram& hist);

}  // namespace benfgg
