#include "fdaloha/hetero.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "fdaloha/analytic.hpp"
#include "fdaloha/search.hpp"

namespace fdaloha {

namespace {

void check_gamma(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("invalid parameter: gamma must be > 0");
}

QuadConfig inner_config(const QuadConfig& cfg) {
    QuadConfig in = cfg;
    in.rel_tol = cfg.rel_tol / 16.0;
    in.abs_tol = cfg.abs_tol / 16.0;
    return in;
}

double interval_overlap(double a0, double a1, double b0, double b1) {
    return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

using FdPrimeKey = std::tuple<double, double, double, double, double, double>;
std::map<FdPrimeKey, QuadResult> g_fd_prime_cache;
std::shared_mutex g_fd_prime_mutex;

QuadResult omega_fd_prime_integrate(double r, double theta, double alpha, double gamma,
                                    const QuadConfig& cfg) {
    const double s = theta * std::pow(r, alpha);
    const QuadConfig in = inner_config(cfg);

    // Effective kernel scale and correction weight of the active branch.
    const double scale = gamma <= 1.0 ? gamma * s : s;
    const double core_w = gamma <= 1.0 ? gamma : 1.0;
    const double corr_w = gamma <= 1.0 ? (1.0 - gamma) / 2.0 : (gamma - 1.0) / 2.0;

    // The leading pi (1+gamma)/2 is folded into the angular integral:
    // (1+gamma)/2 - core - corr = core_w (1 - k) + corr_w (1 - 1/((1+ax)(1+ay))),
    // both evaluated in cancellation-free form.
    auto integrand = [&](double u) {
        const double x = std::pow(u, -alpha);
        auto angular = [&](double phi) {
            const double d2 = u * u + r * r + 2.0 * r * u * std::cos(phi);
            const double y = std::pow(d2, -alpha / 2.0);
            const double core = core_w * log_ratio_kernel_complement(x, y, scale);
            const double ax = scale * x;
            const double ay = scale * y;
            const double corr = std::isfinite(ax) && std::isfinite(ay)
                                    ? corr_w * (ax + ay + ax * ay) / ((1.0 + ax) * (1.0 + ay))
                                    : corr_w;
            return core + corr;
        };
        const double inner = integrate_finite(angular, 0.0, std::numbers::pi, in).value;
        return 4.0 * u * inner;
    };
    const double tail_start = 8.0 * (r + std::pow(s, 1.0 / alpha));
    return integrate_semi_infinite_algebraic(integrand, alpha - 1.0, tail_start, cfg);
}

}  // namespace

double overlap_hd_on_fd(double t, double gamma, double d) {
    check_gamma(gamma);
    if (!(d > 0.0)) throw std::domain_error("invalid parameter: d must be > 0");
    return interval_overlap(0.0, gamma * d, t, t + d) / (gamma * d);
}

double overlap_fd_on_hd(double t, double gamma, double d) {
    check_gamma(gamma);
    if (!(d > 0.0)) throw std::domain_error("invalid parameter: d must be > 0");
    return interval_overlap(0.0, d, t, t + gamma * d) / d;
}

double omega_hd_prime(double r, double theta, double alpha, double gamma) {
    check_gamma(gamma);
    const double base =
        std::numbers::pi * r * r * std::pow(theta, 2.0 / alpha) * gamma_pair(alpha);
    const double hd_term = 2.0 * alpha / (2.0 + alpha);
    if (gamma <= 1.0) return base * (hd_term + (1.0 - gamma) / gamma);
    return base * (hd_term + (gamma - 1.0)) * std::pow(gamma, -(1.0 + 2.0 / alpha));
}

QuadResult omega_fd_prime(double r, double theta, double alpha, double gamma,
                          const QuadConfig& cfg) {
    check_gamma(gamma);
    const FdPrimeKey key{r, theta, alpha, gamma, cfg.rel_tol, cfg.abs_tol};
    {
        std::shared_lock lock(g_fd_prime_mutex);
        auto it = g_fd_prime_cache.find(key);
        if (it != g_fd_prime_cache.end()) return it->second;
    }
    QuadResult res = omega_fd_prime_integrate(r, theta, alpha, gamma, cfg);
    std::unique_lock lock(g_fd_prime_mutex);
    return g_fd_prime_cache.emplace(key, res).first->second;
}

HeteroOmegaSet make_hetero_omega_set(const SystemParams& p, double gamma,
                                     const QuadConfig& cfg) {
    validate(p);
    HeteroOmegaSet set;
    set.gamma = gamma;
    set.omega_hd_prime = omega_hd_prime(p.r, p.theta, p.alpha, gamma);
    const QuadResult fd = omega_fd_prime(p.r, p.theta, p.alpha, gamma, cfg);
    set.omega_fd_prime = fd.value;
    set.fd_error_estimate = fd.abs_error_estimate;
    return set;
}

std::pair<double, double> success_probs_hetero(const SystemParams& p, DuplexMix mix,
                                               const DurationConfig& dur,
                                               const QuadConfig& cfg) {
    validate(mix);
    validate(dur);
    const OmegaSet homog = make_omega_set(p, cfg);
    const double lam_d = p.lambda * dur.d;

    double fd_on_hd = 0.0;
    if (mix.q > 0.0) fd_on_hd = omega_fd_prime(p.r, p.theta, p.alpha, dur.gamma, cfg).value;
    double hd_on_fd = 0.0;
    if (mix.q < 1.0) hd_on_fd = omega_hd_prime(p.r, p.theta, p.alpha, dur.gamma);

    const double p_hd = std::exp(-lam_d * ((1.0 - mix.q) * homog.omega_hd + mix.q * fd_on_hd));
    const double p_fd = beta_coeff(p) * std::exp(-lam_d * dur.gamma *
                                                 ((1.0 - mix.q) * hd_on_fd +
                                                  mix.q * homog.omega_fd));
    return {p_hd, p_fd};
}

double throughput_hetero(const SystemParams& p, DuplexMix mix, const DurationConfig& dur,
                         const QuadConfig& cfg) {
    const auto [p_hd, p_fd] = success_probs_hetero(p, mix, dur, cfg);
    return p.lambda * p.w * dur.d *
           ((1.0 - mix.q) * p_hd + 2.0 * dur.gamma * mix.q * p_fd);
}

HeteroOptimum optimize_duration_pair(const SystemParams& p, DuplexMix mix, double g,
                                     const QuadConfig& cfg) {
    validate(p);
    validate(mix);
    if (!(g > 0.0)) throw std::domain_error("invalid parameter: load g must be > 0");

    auto d_hd_for = [&](double gamma) {
        return g / (p.lambda * (1.0 + mix.q * (gamma - 1.0)));
    };
    auto objective = [&](double log_gamma) {
        const double gamma = std::pow(10.0, log_gamma);
        const double d = d_hd_for(gamma);
        if (!(d > 0.0) || !std::isfinite(d)) return -1.0;
        const double t = throughput_hetero(p, mix, {d, gamma}, cfg);
        if (!std::isfinite(t))
            throw std::runtime_error("optimize_duration_pair: non-finite objective");
        return t;
    };

    // The log grid contains gamma = 1 exactly, so the optimum can never fall
    // below the homogeneous configuration at the same load.
    const double lo = std::log10(kGammaSearchMin);
    const double hi = std::log10(kGammaSearchMax);
    const int grid_points = 51;
    auto [log_g, best] = grid_then_golden_max(objective, lo, hi, grid_points, 1e-7);

    HeteroOptimum out;
    out.gamma = std::pow(10.0, log_g);
    out.d_hd = d_hd_for(out.gamma);
    out.throughput = best;
    return out;
}

double gamma_star(const SystemParams& p, DuplexMix mix, double d_hd, const QuadConfig& cfg) {
    validate(p);
    validate(mix);
    if (!(d_hd > 0.0)) throw std::domain_error("invalid parameter: d_hd must be > 0");

    auto objective = [&](double log_gamma) {
        const double gamma = std::pow(10.0, log_gamma);
        const double t = throughput_hetero(p, mix, {d_hd, gamma}, cfg);
        if (!std::isfinite(t)) throw std::runtime_error("gamma_star: non-finite objective");
        return t;
    };
    const double lo = std::log10(kGammaSearchMin);
    const double hi = std::log10(kGammaSearchMax);
    auto [log_g, value] = grid_then_golden_max(objective, lo, hi, 51, 1e-7);
    (void)value;
    return std::pow(10.0, log_g);
}

}  // namespace fdaloha
