#pragma once

#include <utility>

#include "fdaloha/model.hpp"
#include "fdaloha/quadrature.hpp"

namespace fdaloha {

/// Interference functionals for homogeneous durations. omega_hd and omega_fd
/// multiply lambda*D in the success-probability exponents for the
/// interference created by half- and full-duplex clusters respectively.
struct OmegaSet {
    double omega_hd = 0.0;
    double omega_fd = 0.0;
    double delta = 0.0;  ///< omega_fd / omega_hd, independent of r
    double fd_error_estimate = 0.0;
};

enum class OptimalRegion { full, intermediate, half };

/// Throughput-optimal full-duplex fraction for a given duration, with the
/// switching boundaries d1 (below: all full-duplex) and d2 (above: all
/// half-duplex).
struct OptimalQ {
    double q_star = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    OptimalRegion region = OptimalRegion::half;
};

/// Closed form pi r^2 theta^(2/alpha) Gamma(1+2/alpha) Gamma(1-2/alpha)
/// * 2 alpha / (alpha + 2). Requires r >= 1, theta > 0, alpha > 2.
double omega_hd(double r, double theta, double alpha);

/// Double-integral interference functional of full-duplex clusters:
/// int_0^inf 4u (pi - int_0^pi k(u^-alpha, l(u,phi), theta r^alpha) dphi) du
/// with l(u,phi) = (u^2 + r^2 + 2 r u cos phi)^(-alpha/2). Evaluated by
/// nested adaptive quadrature; scales exactly as r^2.
QuadResult omega_fd(double r, double theta, double alpha, const QuadConfig& cfg = {});

/// Analytic bracket for omega_fd: lower = omega_hd, upper =
/// 4 r^2 pi theta^(2/alpha) Gamma(1+2/alpha) Gamma(1-2/alpha) alpha.
std::pair<double, double> omega_fd_bounds(double r, double theta, double alpha);

/// Ratio omega_fd / omega_hd. Independent of r, so it is computed once per
/// (theta, alpha, tolerance) at r = 1 and memoized (thread-safe).
double delta(double theta, double alpha, const QuadConfig& cfg = {});

/// Builds the full set using the memoized delta factorization.
OmegaSet make_omega_set(const SystemParams& p, const QuadConfig& cfg = {});

/// exp(-lambda D ((1-q) omega_hd + q omega_fd))
double success_prob_hd(const SystemParams& p, DuplexMix mix, double d,
                       const QuadConfig& cfg = {});

/// beta_coeff(p) * success_prob_hd(...)
double success_prob_fd(const SystemParams& p, DuplexMix mix, double d,
                       const QuadConfig& cfg = {});

/// Area throughput density
/// W lambda D (1 + q (2 beta - 1)) exp(-lambda D ((1-q) omega_hd + q omega_fd)).
double throughput(const SystemParams& p, DuplexMix mix, double d, const QuadConfig& cfg = {});

/// Throughput-maximizing full-duplex fraction at fixed duration d. For
/// beta <= 1/2 full-duplex never pays off and q* = 0 for every d.
OptimalQ optimal_q(const SystemParams& p, double d, const QuadConfig& cfg = {});

struct OptimalDuration {
    double d_star = 0.0;
    double t_star = 0.0;
};

/// d* = 1 / (lambda ((1-q) omega_hd + q omega_fd)) and the peak throughput
/// t* = W (1 + q (2 beta - 1)) / (e ((1-q) omega_hd + q omega_fd)).
OptimalDuration optimal_duration(const SystemParams& p, DuplexMix mix,
                                 const QuadConfig& cfg = {});

/// Peak-throughput ratio of an all-full-duplex network over an all-half-duplex
/// one: chi = 2 beta / delta.
double chi_gain(const SystemParams& p, const QuadConfig& cfg = {});

/// Minimum cancellation efficiency for full-duplex to be useful:
/// 1 - ln(2) r^-alpha / theta, clamped below at 0. At eta = eta_min,
/// beta = 1/2 exactly.
double eta_min(double r, double theta, double alpha);

/// Gamma(1 + 2/alpha) * Gamma(1 - 2/alpha); shared by several closed forms.
double gamma_pair(double alpha);

}  // namespace fdaloha
