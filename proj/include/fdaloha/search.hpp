#pragma once

#include <cmath>
#include <functional>
#include <utility>

namespace fdaloha {

/// Golden-section maximization of a unimodal f on [a, b]. Deterministic,
/// derivative-free; returns the midpoint of the final bracket and its value.
inline std::pair<double, double> golden_section_max(const std::function<double(double)>& f,
                                                    double a, double b, double x_tol,
                                                    int max_iter = 200) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

/// Coarse grid scan over [a, b] (n points, inclusive) followed by
/// golden-section refinement around the best grid point.
inline std::pair<double, double> grid_then_golden_max(const std::function<double(double)>& f,
                                                      double a, double b, int n,
                                                      double x_tol) {
    const double step = (b - a) / (n - 1);
    double best_x = a;
    double best_v = f(a);
    for (int i = 1; i < n; ++i) {
        const double x = (i == n - 1) ? b : a + step * i;
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    const double lo = std::max(a, best_x - step);
    const double hi = std::min(b, best_x + step);
    auto refined = golden_section_max(f, lo, hi, x_tol);
    if (refined.second >= best_v) return refined;
    return {best_x, best_v};
}

}  // namespace fdaloha
