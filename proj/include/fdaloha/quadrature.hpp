#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace fdaloha {

struct QuadConfig {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_depth = 50;  ///< max bisection depth of any subinterval
};

struct QuadResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

/// Thrown when the adaptive scheme cannot reach the requested tolerance
/// within max_depth.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, QuadResult best)
        : std::runtime_error(what), best_so_far(best) {}
    QuadResult best_so_far;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
/// Stops once the accumulated error estimate satisfies
/// max(rel_tol * |value|, abs_tol); subintervals are bisected worst-first.
QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            const QuadConfig& cfg = {});

/// Integration of f over [0, inf) via the substitution u = t / (1 - t),
/// which maps the polynomially decaying tails used here onto t in [0, 1).
/// Delegates to integrate_finite with the same tolerance contract.
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   const QuadConfig& cfg = {});

/// Integration of f over [0, inf) for integrands with a known algebraic
/// tail f(u) ~ c u^-p for u >= tail_start (p > 1). The head [0, tail_start]
/// is integrated directly; the tail is mapped by u = tail_start * t^(-1/(p-1)),
/// under which an exact u^-p decay becomes a constant integrand on (0, 1].
/// This keeps the subdivision depth bounded for any p > 1, where the generic
/// u = t/(1-t) map develops an endpoint singularity of order (p - 2).
QuadResult integrate_semi_infinite_algebraic(const std::function<double(double)>& f,
                                             double tail_exponent, double tail_start,
                                             const QuadConfig& cfg = {});

/// Stabilized evaluation of
///     k(x, y, s) = (ln(1 + s x) - ln(1 + s y)) / (s (x - y)),
/// the shared kernel of the full-duplex interference integrals. The
/// removable singularity at x = y is replaced by the analytic limit
/// 1 / (1 + s (x+y)/2) when |x - y| <= 1e-9 * max(x, y, 1); elsewhere a
/// log1p form avoids cancellation. Result is always in (0, 1].
double log_ratio_kernel(double x, double y, double s);

/// Stable complement 1 - log_ratio_kernel(x, y, s). The kernel approaches 1
/// when s x and s y are small; computing the complement directly keeps full
/// relative precision there, which the interference integrands need in their
/// far-field region.
double log_ratio_kernel_complement(double x, double y, double s);

}  // namespace fdaloha
