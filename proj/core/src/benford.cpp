#include "benfgg/benford.hpp"

#include <cmath>
#include <stdexcept>

namespace benfgg {

namespace {

void check_base(int base) {
    if (base < 2) throw std::domain_error("base must be an integer >= 2");
}

// |x| / base^e, split in two steps when base^-e would overflow (denormal x)
double scale_by_power(double ax, int base, int e) {
    if (e >= 0) return ax / std::pow(double(base), double(e));
    if (e < -300) return ax * std::pow(double(base), 300.0) *
                         std::pow(double(base), double(-e - 300));
    return ax * std::pow(double(base), double(-e));
}

}  // namespace

SignificandDecomposition significand(double x, int base) {
    check_base(base);
    if (x == 0.0 || !std::isfinite(x))
        throw std::domain_error("significand: x must be finite and nonzero");

    const double ax = std::fabs(x);
    // Exponent from the log, then correct against direct comparison: the
    // floating log alone can misclassify values within rounding distance
    // of an exact power of the base.
    int e = int(std::floor(std::log(ax) / std::log(double(base))));
    double s = scale_by_power(ax, base, e);
    while (s >= double(base)) {
        ++e;
        s = scale_by_power(ax, base, e);
    }
    while (s < 1.0) {
        --e;
        s = scale_by_power(ax, base, e);
    }
    return {s, e};
}

double mantissa(double x, int base) {
    if (!(x > 0.0)) throw std::domain_error("mantissa: x must be > 0");
    // Via the significand rather than fmod(log, 1): exact powers of the
    // base land on 0 instead of wrapping to just below 1.
    const double s = significand(x, base).significand;
    return std::log(s) / std::log(double(base));
}

int leading_digit(double x, int base) {
    return int(significand(x, base).significand);
}

double benford_digit_prob(int digit, int base) {
    check_base(base);
    if (digit < 1 || digit > base - 1)
        throw std::domain_error("benford_digit_prob: digit must lie in 1 .. base-1");
    return std::log1p(1.0 / double(digit)) / std::log(double(base));
}

DigitHistogram digit_histogram(std::span<const double> values, int base) {
    check_base(base);
    if (values.empty())
        throw std::domain_error("digit_histogram: values must be nonempty");

    DigitHistogram hist;
    hist.base = base;
    hist.counts.assign(std::size_t(base) - 1, 0);
    for (double v : values) {
        if (!(v > 0.0))
            throw std::domain_error("digit_histogram: values must be > 0");
        ++hist.counts[std::size_t(leading_digit(v, base)) - 1];
    }
    hist.total = values.size();
    return hist;
}

DigitHistogram merge(const DigitHistogram& lhs, const DigitHistogram& rhs) {
    if (lhs.base != rhs.base)
        throw std::domain_error("merge: histograms must share a base");
    DigitHistogram out = lhs;
    for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += rhs.counts[i];
    out.total += rhs.total;
    return out;
}

double sse_error(const DigitHistogram& hist) {
    check_base(hist.base);
    if (hist.total == 0)
        throw std::domain_error("sse_error: histogram is empty");
    double sse = 0.0;
    for (int digit = 1; digit < hist.base; ++digit) {
        const double freq = double(hist.counts[std::size_t(digit) - 1]) / double(hist.total);
        const double diff = freq - benford_digit_prob(digit, hist.base);
        sse += diff * diff;
    }
    return sse;
}

}  // namespace benfgg
