#include "benfgg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "benfgg/benford.hpp"

namespace benfgg {

namespace {

// golden-section maximization of |f_M - 1| on [lo, hi]
void golden_refine(const FourierSeries& series, double lo, double hi,
                   double& best, double& best_u) {
    const auto value = [&](double u) { return std::fabs(series.eval(u) - 1.0); };
    constexpr double inv_phi = 0.61803398874989485;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = value(x1);
    double f2 = value(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = value(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = value(x1);
        }
    }
    const double u = f1 > f2 ? x1 : x2;
    const double f = std::max(f1, f2);
    if (f > best) {
        best = f;
        best_u = u;
    }
}

const char* axis_name(ParamAxis axis) {
    switch (axis) {
        case ParamAxis::scale: return "a";
        case ParamAxis::shape: return "d";
        case ParamAxis::power: return "p";
    }
    throw std::domain_error("unknown axis");
}

GenGammaParams with_axis(GenGammaParams params, ParamAxis axis, double value) {
    switch (axis) {
        case ParamAxis::scale: params.a = value; break;
        case ParamAxis::shape: params.d = value; break;
        case ParamAxis::power: params.p = value; break;
    }
    return params;
}

}  // namespace

SupResidual sup_residual(const FourierSeries& series, int grid_points) {
    if (grid_points < 64)
        throw std::domain_error("sup_residual: grid_points must be >= 64");

    const double h = 1.0 / double(grid_points);
    std::vector<double> g(std::size_t(grid_points), 0.0);
    std::size_t top = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i] = std::fabs(series.eval(double(i) * h) - 1.0);
        if (g[i] > g[top]) top = i;
    }

    SupResidual out;
    out.sup = g[top];
    out.argmax_u = double(top) * h;

    // refine around the three best grid cells
    std::vector<std::size_t> order(g.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::partial_sort(order.begin(), order.begin() + std::min<std::size_t>(3, order.size()),
                      order.end(),
                      [&](std::size_t l, std::size_t r) { return g[l] > g[r]; });
    for (std::size_t j = 0; j < std::min<std::size_t>(3, order.size()); ++j) {
        const double uc = double(order[j]) * h;
        golden_refine(series, uc - h, uc + h, out.sup, out.argmax_u);
    }

    out.lipschitz_slack = 0.5 * series.derivative_bound() * h;
    if (out.argmax_u < 0.0) out.argmax_u += 1.0;  // refinement may step across 0
    return out;
}

SupResidual sup_residual(const GenGammaParams& params, std::int64_t terms,
                         int grid_points) {
    return sup_residual(FourierSeries(params, terms), grid_points);
}

DeviationReport deviation_bound(const GenGammaParams& params, double epsilon,
                                int grid_points) {
    const std::int64_t terms = min_terms(params, epsilon);
    const FourierSeries series(params, terms);
    const SupResidual sr = sup_residual(series, grid_points);

    DeviationReport report;
    report.params = params;
    report.epsilon = epsilon;
    report.terms = terms;
    report.sup_residual = sr.sup;
    report.grid_points = grid_points;
    report.lipschitz_slack = sr.lipschitz_slack;
    report.bound = epsilon + sr.sup + sr.lipschitz_slack;
    return report;
}

double per_digit_deviation_signed(const FourierSeries& series, int digit) {
    const int base = series.params().base;
    if (digit < 1 || digit > base - 1)
        throw std::domain_error("per_digit_deviation: digit must lie in 1 .. base-1");
    const double ln_base = std::log(double(base));
    const double lo = std::log(double(digit)) / ln_base;
    const double hi = std::log(double(digit) + 1.0) / ln_base;
    return series.residue_integral(lo, hi);
}

double per_digit_deviation(const GenGammaParams& params, int digit,
                           std::int64_t terms) {
    const FourierSeries series(params, terms);
    return std::fabs(per_digit_deviation_signed(series, digit));
}

double ks_statistic(std::span<const double> unit_values) {
    if (unit_values.empty())
        throw std::domain_error("ks_statistic: values must be nonempty");
    std::vector<double> sorted(unit_values.begin(), unit_values.end());
    for (double v : sorted)
        if (!(v >= 0.0 && v < 1.0))
            throw std::domain_error("ks_statistic: values must lie in [0, 1)");
    std::sort(sorted.begin(), sorted.end());

    const double n = double(sorted.size());
    double stat = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double above = double(i + 1) / n - sorted[i];
        const double below = sorted[i] - double(i) / n;
        stat = std::max(stat, std::max(above, below));
    }
    return stat;
}

KsResult ks_test_run(const GenGammaParams& params, std::size_t n,
                     std::uint64_t seed) {
    const SampleBatch batch = sample(n, params, seed);
    std::vector<double> unit(batch.values.size());
    for (std::size_t i = 0; i < unit.size(); ++i)
        unit[i] = mantissa(batch.values[i], params.base);

    KsResult result;
    result.statistic = ks_statistic(unit);
    result.sample_size = n;
    result.params = params;
    result.seed = seed;
    return result;
}

SweepGrid ks_sweep(const std::vector<double>& d_values,
                   const std::vector<double>& p_values, double a, int base,
                   std::size_t n, std::uint64_t seed) {
    if (d_values.empty() || p_values.empty())
        throw std::domain_error("ks_sweep: axes must be nonempty");
    if (n < 1) throw std::domain_error("ks_sweep: n must be >= 1");

    SweepGrid grid;
    grid.axes = {{"d", d_values}, {"p", p_values}};
    grid.cells.resize(d_values.size() * p_values.size());
    grid.n = n;
    grid.seed = seed;

    for (std::size_t i = 0; i < d_values.size(); ++i) {
        for (std::size_t j = 0; j < p_values.size(); ++j) {
            const std::size_t cell = i * p_values.size() + j;
            GenGammaParams params{a, d_values[i], p_values[j], base};
            grid.cells[cell] =
                ks_test_run(params, n, derive_seed(seed, cell)).statistic;
        }
    }
    return grid;
}

std::vector<DeviationReport> bound_sweep_reports(
    ParamAxis axis, const std::vector<double>& values,
    const GenGammaParams& fixed, double epsilon, int grid_points) {
    if (values.empty())
        throw std::domain_error("bound_sweep: values must be nonempty");
    std::vector<DeviationReport> reports;
    reports.reserve(values.size());
    for (double v : values)
        reports.push_back(deviation_bound(with_axis(fixed, axis, v), epsilon, grid_points));
    return reports;
}

SweepGrid bound_sweep(ParamAxis axis, const std::vector<double>& values,
                      const GenGammaParams& fixed, double epsilon,
                      int grid_points) {
    const auto reports = bound_sweep_reports(axis, values, fixed, epsilon, grid_points);
    SweepGrid grid;
    grid.axes = {{axis_name(axis), values}};
    grid.cells.reserve(reports.size());
    for (const auto& r : reports) grid.cells.push_back(r.bound);
    grid.epsilon = epsilon;
    return grid;
}

}  // namespace benfgg
