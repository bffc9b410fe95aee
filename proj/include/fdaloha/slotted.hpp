#pragma once

#include "fdaloha/model.hpp"
#include "fdaloha/quadrature.hpp"

namespace fdaloha {

/// Interference functionals of the synchronized (slotted) reference system.
struct SlottedOmegaSet {
    double omega_hd_s = 0.0;
    double omega_fd_s = 0.0;
};

/// pi r^2 theta^(2/alpha) Gamma(1+2/alpha) Gamma(1-2/alpha); equals
/// omega_hd * (alpha+2) / (2 alpha).
double omega_hd_slotted(double r, double theta, double alpha);

/// int_0^inf 2u ( pi - 1/(1 + theta r^a u^-a) int_0^pi dphi/(1 + theta r^a l(u,phi)) ) du
/// with the same l(u,phi) as the unslotted functionals. Memoized.
QuadResult omega_fd_slotted(double r, double theta, double alpha, const QuadConfig& cfg = {});

SlottedOmegaSet make_slotted_omega_set(const SystemParams& p, const QuadConfig& cfg = {});

/// T_s = W g (1 + q (2 beta - 1)) exp(-g ((1-q) omega_hd_s + q omega_fd_s)),
/// parameterized directly by the network load g.
double throughput_slotted(const SystemParams& p, DuplexMix mix, double g,
                          const QuadConfig& cfg = {});

enum class XiMode {
    homogeneous,      ///< unslotted system with a common duration d = g / lambda
    optimized_hetero  ///< unslotted system with (d_hd, gamma) optimized at load g
};

/// Ratio of unslotted to slotted throughput at equal load g. Independent of
/// eta in homogeneous mode (the beta factors cancel).
double xi_ratio(const SystemParams& p, DuplexMix mix, double g, XiMode mode,
                const QuadConfig& cfg = {});

}  // namespace fdaloha
