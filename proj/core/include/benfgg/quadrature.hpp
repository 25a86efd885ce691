#pragma once

#include <cmath>
#include <utility>
#include <vector>

// Adaptive Gauss-Kronrod 7-15 integration.  All nodes are interior to the
// interval, so integrands only defined on the open interval are fine.

namespace benfgg {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // accumulated error estimate
    bool converged = true;
};

namespace detail {

// node, Gauss weight (0 for Kronrod-only nodes), Kronrod weight
constexpr double kGK15[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
    {0.207784955007898468, 0.0, 0.204432940075298894},
    {0.586087235467691130, 0.0, 0.169004726639267903},
    {0.864864423359769073, 0.0, 0.104790010322250184},
    {0.991455371120812639, 0.0, 0.022935322010529225},
};

template <class F>
std::pair<double, double> gauss_kronrod_15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double gauss = kGK15[0][1] * f0;
    double kronrod = kGK15[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        gauss += kGK15[i][1] * fi;
        kronrod += kGK15[i][2] * fi;
    }
    gauss *= half;
    kronrod *= half;

    double err = std::fabs(kronrod - gauss);
    err = 200.0 * err * std::sqrt(200.0 * err);  // (200 |K - G|)^{3/2}
    return {kronrod, err};
}

}  // namespace detail

template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    double abs_tol = 1e-12,
                                    double rel_tol = 1e-12,
                                    int max_intervals = 4096) {
    QuadratureResult out;
    std::vector<std::pair<double, double>> stack{{a, b}};
    int used = 1;
    while (!stack.empty()) {
        const auto [lo, hi] = stack.back();
        stack.pop_back();
        const auto [value, err] = detail::gauss_kronrod_15(f, lo, hi);
        const double local_tol =
            std::max(abs_tol, rel_tol * std::fabs(value)) * (hi - lo) / (b - a);
        if (err <= local_tol || used >= max_intervals) {
            out.value += value;
            out.error += err;
            if (err > local_tol) out.converged = false;
            continue;
        }
        const double mid = 0.5 * (lo + hi);
        stack.emplace_back(lo, mid);
        stack.emplace_back(mid, hi);
        used += 2;
    }
    return out;
}

}  // namespace benfgg
