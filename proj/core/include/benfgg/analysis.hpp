#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "benfgg/wrapped_pdf.hpp"

// Deviation-from-Benford quantification and the experiments around it:
// certified sup of |f_M - 1|, the total deviation bound
// epsilon + sup|f_M - 1|, exact per-digit deviations, the one-sample
// Kolmogorov-Smirnov statistic, and the (d, p) / single-axis sweeps.

namespace benfgg {

struct SupResidual {
    double sup = 0.0;             // largest |f_M(u) - 1| found
    double lipschitz_slack = 0.0; // L * h / 2; sup + slack certifies the true sup
    double argmax_u = 0.0;
};

struct DeviationReport {
    GenGammaParams params;
    double epsilon = 0.0;
    std::int64_t terms = 0;
    double sup_residual = 0.0;
    int grid_points = 0;
    double lipschitz_slack = 0.0;
    double bound = 0.0;  // epsilon + sup_residual + lipschitz_slack
};

struct KsResult {
    double statistic = 0.0;
    std::size_t sample_size = 0;
    GenGammaParams params;
    std::uint64_t seed = 0;
};

struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

struct SweepGrid {
    std::vector<SweepAxis> axes;
    std::vector<double> cells;  // row-major over the axes
    double epsilon = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

enum class ParamAxis { scale, shape, power };  // a, d, p

// |f_M - 1| maximized over a uniform grid, the top cells refined by
// golden-section search.  The returned sup plus slack is a one-sided
// certificate: the true supremum never exceeds it.
SupResidual sup_residual(const FourierSeries& series, int grid_points);
SupResidual sup_residual(const GenGammaParams& params, std::int64_t terms,
                         int grid_points);

// M = min_terms(params, epsilon); bound = epsilon + sup + slack.  Bounds
// the distance of every leading-digit probability from Benford.
DeviationReport deviation_bound(const GenGammaParams& params, double epsilon,
                                int grid_points = 1024);

// integral of (f_M - 1) over [log_B digit, log_B(digit+1)], term-wise exact
double per_digit_deviation_signed(const FourierSeries& series, int digit);
double per_digit_deviation(const GenGammaParams& params, int digit,
                           std::int64_t terms);

// One-sample KS statistic of values in [0, 1) against uniform [0, 1).
double ks_statistic(std::span<const double> unit_values);

// n draws, mantissa-transformed, KS against uniform.
KsResult ks_test_run(const GenGammaParams& params, std::size_t n,
                     std::uint64_t seed);

// KS statistic per (d, p) cell; cell seeds derive from seed and the cell
// index, so results do not depend on evaluation order.
SweepGrid ks_sweep(const std::vector<double>& d_values,
                   const std::vector<double>& p_values, double a, int base,
                   std::size_t n, std::uint64_t seed);

std::vector<DeviationReport> bound_sweep_reports(
    ParamAxis axis, const std::vector<double>& values,
    const GenGammaParams& fixed, double epsilon, int grid_points = 1024);

SweepGrid bound_sweep(ParamAxis axis, const std::vector<double>& values,
                      const GenGammaParams& fixed, double epsilon,
                      int grid_points = 1024);

}  // namespace benfgg
