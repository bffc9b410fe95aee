#pragma once

#include <utility>

#include "fdaloha/model.hpp"
#include "fdaloha/quadrature.hpp"

namespace fdaloha {

/// Interference functionals for networks where half-duplex packets last d
/// and full-duplex exchanges gamma * d.
struct HeteroOmegaSet {
    double omega_hd_prime = 0.0;  ///< half-duplex interference on a full-duplex reception
    double omega_fd_prime = 0.0;  ///< full-duplex interference on a half-duplex reception
    double gamma = 1.0;
    double fd_error_estimate = 0.0;
};

/// Result of the constrained (d_hd, gamma) throughput maximization.
struct HeteroOptimum {
    double d_hd = 0.0;
    double gamma = 1.0;
    double throughput = 0.0;
};

/// Fraction of a full-duplex reception window [0, gamma d] covered by a
/// half-duplex transmission [t, t + d]. Piecewise linear, in [0, 1], zero
/// outside t in [-d, gamma d]; integrates to d over the real line.
double overlap_hd_on_fd(double t, double gamma, double d);

/// Fraction of a half-duplex reception window [0, d] covered by a
/// full-duplex transmission [t, t + gamma d]. Support [-gamma d, d];
/// integrates to gamma d.
double overlap_fd_on_hd(double t, double gamma, double d);

/// Closed form for the half-duplex-on-full-duplex functional:
///   gamma <= 1:  pi r^2 theta^(2/a) G(1+2/a) G(1-2/a) (2a/(2+a) + (1-gamma)/gamma)
///   gamma  > 1:  pi r^2 theta^(2/a) G(1+2/a) G(1-2/a) (2a/(2+a) + gamma - 1) gamma^-(1+2/a)
/// Both branches agree with omega_hd at gamma = 1.
double omega_hd_prime(double r, double theta, double alpha, double gamma);

/// Full-duplex-on-half-duplex functional, by nested adaptive quadrature:
/// int 4u ( pi(1+gamma)/2 - int_0^pi [ core + corr ] dphi ) du, where for
/// gamma <= 1 core = gamma k(x, y, gamma s) and
/// corr = (1-gamma) / (2 (1+gamma s x)(1+gamma s y)), while for gamma > 1
/// core = k(x, y, s) and corr = (gamma-1) / (2 (1+s x)(1+s y)).
/// Reduces to omega_fd at gamma = 1; scales exactly as r^2. Memoized.
QuadResult omega_fd_prime(double r, double theta, double alpha, double gamma,
                          const QuadConfig& cfg = {});

HeteroOmegaSet make_hetero_omega_set(const SystemParams& p, double gamma,
                                     const QuadConfig& cfg = {});

/// Success probabilities (p_hd, p_fd) with mixed durations:
///   p_hd = exp(-lambda d ((1-q) omega_hd + q omega_fd_prime))
///   p_fd = beta exp(-lambda gamma d ((1-q) omega_hd_prime + q omega_fd))
std::pair<double, double> success_probs_hetero(const SystemParams& p, DuplexMix mix,
                                               const DurationConfig& dur,
                                               const QuadConfig& cfg = {});

/// T = lambda W d ((1-q) p_hd + 2 gamma q p_fd); reduces to the homogeneous
/// throughput at gamma = 1.
double throughput_hetero(const SystemParams& p, DuplexMix mix, const DurationConfig& dur,
                         const QuadConfig& cfg = {});

/// Search range for the duration-ratio optimizers.
inline constexpr double kGammaSearchMin = 1e-3;
inline constexpr double kGammaSearchMax = 1e2;

/// Maximizes throughput_hetero over gamma under the fixed-load constraint
/// g = lambda d_hd (1 + q (gamma - 1)), which determines d_hd from gamma.
/// Deterministic log-space grid plus golden-section refinement over
/// gamma in [kGammaSearchMin, kGammaSearchMax]; a boundary optimum is
/// returned as-is (the objective saturates monotonically there).
HeteroOptimum optimize_duration_pair(const SystemParams& p, DuplexMix mix, double g,
                                     const QuadConfig& cfg = {});

/// Duration ratio maximizing throughput_hetero at fixed d_hd and q, over the
/// same search range.
double gamma_star(const SystemParams& p, DuplexMix mix, double d_hd,
                  const QuadConfig& cfg = {});

}  // namespace fdaloha
