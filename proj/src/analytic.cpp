#include "fdaloha/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace fdaloha {

namespace {

void check_domain(double r, double theta, double alpha) {
    if (!(r >= 1.0)) throw std::domain_error("invalid parameter: r must be >= 1");
    if (!(theta > 0.0)) throw std::domain_error("invalid parameter: theta must be > 0");
    if (!(alpha > 2.0)) throw std::domain_error("invalid parameter: alpha must be > 2");
}

// Tighter settings for inner angular integrals so their noise stays below
// the outer rule's error estimate.
QuadConfig inner_config(const QuadConfig& cfg) {
    QuadConfig in = cfg;
    in.rel_tol = cfg.rel_tol / 16.0;
    in.abs_tol = cfg.abs_tol / 16.0;
    return in;
}

using DeltaKey = std::tuple<double, double, double, double>;
std::map<DeltaKey, QuadResult> g_delta_cache;
std::shared_mutex g_delta_mutex;

// omega_fd at r = 1 with memoization; delta and make_omega_set lean on the
// exact r^2 scaling so the integral is computed once per (theta, alpha).
QuadResult omega_fd_unit(double theta, double alpha, const QuadConfig& cfg) {
    const DeltaKey key{theta, alpha, cfg.rel_tol, cfg.abs_tol};
    {
        std::shared_lock lock(g_delta_mutex);
        auto it = g_delta_cache.find(key);
        if (it != g_delta_cache.end()) return it->second;
    }
    QuadResult res = omega_fd(1.0, theta, alpha, cfg);
    std::unique_lock lock(g_delta_mutex);
    return g_delta_cache.emplace(key, res).first->second;
}

}  // namespace

double gamma_pair(double alpha) {
    const double z = 2.0 / alpha;
    return std::tgamma(1.0 + z) * std::tgamma(1.0 - z);
}

double omega_hd(double r, double theta, double alpha) {
    check_domain(r, theta, alpha);
    return std::numbers::pi * r * r * std::pow(theta, 2.0 / alpha) * gamma_pair(alpha) *
           2.0 * alpha / (alpha + 2.0);
}

QuadResult omega_fd(double r, double theta, double alpha, const QuadConfig& cfg) {
    check_domain(r, theta, alpha);
    const double s = theta * std::pow(r, alpha);
    const QuadConfig in = inner_config(cfg);

    // pi - int k dphi is evaluated as int (1 - k) dphi through the stable
    // complement, which keeps relative precision in the far field where the
    // kernel approaches 1.
    auto integrand = [&](double u) {
        const double x = std::pow(u, -alpha);
        auto angular = [&](double phi) {
            const double d2 = u * u + r * r + 2.0 * r * u * std::cos(phi);
            const double y = std::pow(d2, -alpha / 2.0);
            return log_ratio_kernel_complement(x, y, s);
        };
        const double inner = integrate_finite(angular, 0.0, std::numbers::pi, in).value;
        return 4.0 * u * inner;
    };
    const double tail_start = 8.0 * (r + std::pow(s, 1.0 / alpha));
    return integrate_semi_infinite_algebraic(integrand, alpha - 1.0, tail_start, cfg);
}

std::pair<double, double> omega_fd_bounds(double r, double theta, double alpha) {
    check_domain(r, theta, alpha);
    const double lower = omega_hd(r, theta, alpha);
    const double upper = 4.0 * r * r * std::numbers::pi * std::pow(theta, 2.0 / alpha) *
                         gamma_pair(alpha) * alpha;
    return {lower, upper};
}

double delta(double theta, double alpha, const QuadConfig& cfg) {
    check_domain(1.0, theta, alpha);
    return omega_fd_unit(theta, alpha, cfg).value / omega_hd(1.0, theta, alpha);
}

OmegaSet make_omega_set(const SystemParams& p, const QuadConfig& cfg) {
    validate(p);
    const QuadResult unit = omega_fd_unit(p.theta, p.alpha, cfg);
    OmegaSet set;
    set.omega_hd = omega_hd(p.r, p.theta, p.alpha);
    set.omega_fd = p.r * p.r * unit.value;
    set.delta = set.omega_fd / set.omega_hd;
    set.fd_error_estimate = p.r * p.r * unit.abs_error_estimate;
    return set;
}

double success_prob_hd(const SystemParams& p, DuplexMix mix, double d, const QuadConfig& cfg) {
    validate(mix);
    if (!(d >= 0.0)) throw std::domain_error("invalid parameter: d must be >= 0");
    const OmegaSet set = make_omega_set(p, cfg);
    return std::exp(-p.lambda * d * ((1.0 - mix.q) * set.omega_hd + mix.q * set.omega_fd));
}

double success_prob_fd(const SystemParams& p, DuplexMix mix, double d, const QuadConfig& cfg) {
    return beta_coeff(p) * success_prob_hd(p, mix, d, cfg);
}

double throughput(const SystemParams& p, DuplexMix mix, double d, const QuadConfig& cfg) {
    const double beta = beta_coeff(p);
    const double p_hd = success_prob_hd(p, mix, d, cfg);
    return p.w * p.lambda * d * (1.0 + mix.q * (2.0 * beta - 1.0)) * p_hd;
}

OptimalQ optimal_q(const SystemParams& p, double d, const QuadConfig& cfg) {
    validate(p);
    if (!(d > 0.0)) throw std::domain_error("invalid parameter: d must be > 0");
    const double beta = beta_coeff(p);

    OptimalQ out;
    if (beta <= 0.5) {
        // Full-duplex can never beat half-duplex: 2 beta - 1 <= 0.
        out.q_star = 0.0;
        out.region = OptimalRegion::half;
        return out;
    }

    const OmegaSet set = make_omega_set(p, cfg);
    const double d_omega = set.omega_fd - set.omega_hd;
    const double two_b = 2.0 * beta - 1.0;
    out.d2 = two_b / (p.lambda * d_omega);
    out.d1 = out.d2 * (1.0 - 1.0 / (2.0 * beta));

    if (d < out.d1) {
        out.q_star = 1.0;
        out.region = OptimalRegion::full;
    } else if (d < out.d2) {
        // Stationary point of the throughput in q, clamped to [0, 1].
        const double q = 1.0 / (p.lambda * d * d_omega) - 1.0 / two_b;
        out.q_star = std::clamp(q, 0.0, 1.0);
        out.region = out.q_star >= 1.0  ? OptimalRegion::full
                     : out.q_star <= 0.0 ? OptimalRegion::half
                                         : OptimalRegion::intermediate;
    } else {
        out.q_star = 0.0;
        out.region = OptimalRegion::half;
    }
    return out;
}

OptimalDuration optimal_duration(const SystemParams& p, DuplexMix mix, const QuadConfig& cfg) {
    validate(mix);
    const OmegaSet set = make_omega_set(p, cfg);
    const double mixture = (1.0 - mix.q) * set.omega_hd + mix.q * set.omega_fd;
    const double beta = beta_coeff(p);
    OptimalDuration out;
    out.d_star = 1.0 / (p.lambda * mixture);
    out.t_star = p.w * (1.0 + mix.q * (2.0 * beta - 1.0)) / (std::numbers::e * mixture);
    return out;
}

double chi_gain(const SystemParams& p, const QuadConfig& cfg) {
    return 2.0 * beta_coeff(p) / delta(p.theta, p.alpha, cfg);
}

double eta_min(double r, double theta, double alpha) {
    check_domain(r, theta, alpha);
    const double threshold = 1.0 - std::numbers::ln2 * std::pow(r, -alpha) / theta;
    return std::max(0.0, threshold);
}

}  // namespace fdaloha
