#include "fdaloha/slotted.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "fdaloha/analytic.hpp"
#include "fdaloha/hetero.hpp"

namespace fdaloha {

namespace {

void check_domain(double r, double theta, double alpha) {
    if (!(r >= 1.0)) throw std::domain_error("invalid parameter: r must be >= 1");
    if (!(theta > 0.0)) throw std::domain_error("invalid parameter: theta must be > 0");
    if (!(alpha > 2.0)) throw std::domain_error("invalid parameter: alpha must be > 2");
}

using Key = std::tuple<double, double, double, double, double>;
std::map<Key, QuadResult> g_cache;
std::shared_mutex g_mutex;

}  // namespace

double omega_hd_slotted(double r, double theta, double alpha) {
    check_domain(r, theta, alpha);
    return std::numbers::pi * r * r * std::pow(theta, 2.0 / alpha) * gamma_pair(alpha);
}

QuadResult omega_fd_slotted(double r, double theta, double alpha, const QuadConfig& cfg) {
    check_domain(r, theta, alpha);
    const Key key{r, theta, alpha, cfg.rel_tol, cfg.abs_tol};
    {
        std::shared_lock lock(g_mutex);
        auto it = g_cache.find(key);
        if (it != g_cache.end()) return it->second;
    }

    const double s = theta * std::pow(r, alpha);
    QuadConfig in = cfg;
    in.rel_tol = cfg.rel_tol / 16.0;
    in.abs_tol = cfg.abs_tol / 16.0;

    // pi - 1/(1+sx) int 1/(1+sy) dphi rewritten as
    // int (sx + sy + s^2 x y) / ((1+sx)(1+sy)) dphi to avoid cancellation in
    // the far field.
    auto integrand = [&](double u) {
        const double x = std::pow(u, -alpha);
        auto angular = [&](double phi) {
            const double d2 = u * u + r * r + 2.0 * r * u * std::cos(phi);
            const double y = std::pow(d2, -alpha / 2.0);
            const double ax = s * x;
            const double ay = s * y;
            if (!std::isfinite(ax) || !std::isfinite(ay)) return 1.0;
            return (ax + ay + ax * ay) / ((1.0 + ax) * (1.0 + ay));
        };
        const double inner = integrate_finite(angular, 0.0, std::numbers::pi, in).value;
        return 2.0 * u * inner;
    };
    const double tail_start = 8.0 * (r + std::pow(s, 1.0 / alpha));
    QuadResult res = integrate_semi_infinite_algebraic(integrand, alpha - 1.0, tail_start, cfg);

    std::unique_lock lock(g_mutex);
    return g_cache.emplace(key, res).first->second;
}

SlottedOmegaSet make_slotted_omega_set(const SystemParams& p, const QuadConfig& cfg) {
    validate(p);
    return {omega_hd_slotted(p.r, p.theta, p.alpha),
            omega_fd_slotted(p.r, p.theta, p.alpha, cfg).value};
}

double throughput_slotted(const SystemParams& p, DuplexMix mix, double g,
                          const QuadConfig& cfg) {
    validate(mix);
    if (!(g >= 0.0)) throw std::domain_error("invalid parameter: load g must be >= 0");
    const SlottedOmegaSet set = make_slotted_omega_set(p, cfg);
    const double beta = beta_coeff(p);
    return p.w * g * (1.0 + mix.q * (2.0 * beta - 1.0)) *
           std::exp(-g * ((1.0 - mix.q) * set.omega_hd_s + mix.q * set.omega_fd_s));
}

double xi_ratio(const SystemParams& p, DuplexMix mix, double g, XiMode mode,
                const QuadConfig& cfg) {
    if (!(g > 0.0)) throw std::domain_error("invalid parameter: load g must be > 0");
    const double denom = throughput_slotted(p, mix, g, cfg);
    double numer = 0.0;
    switch (mode) {
        case XiMode::homogeneous:
            numer = throughput(p, mix, g / p.lambda, cfg);
            break;
        case XiMode::optimized_hetero:
            numer = optimize_duration_pair(p, mix, g, cfg).throughput;
            break;
    }
    return numer / denom;
}

}  // namespace fdaloha
