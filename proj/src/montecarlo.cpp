#include "fdaloha/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace fdaloha {

namespace {

// Counter-based uniform stream: every draw is a pure function of
// (seed, stream tag, indices), so replications are order-independent and
// safe to evaluate from any thread.
enum Stream : std::uint64_t {
    kClusterCount = 1,
    kPositionX = 2,
    kPositionY = 3,
    kAngle = 4,
    kPhase = 5,
    kMode = 6,
    kBackoff = 7,
    kFading = 8,
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_key(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x853c49e6748fea9bULL;
    for (std::uint64_t p : parts) h = splitmix64(h ^ p);
    return h;
}

double u01(std::initializer_list<std::uint64_t> parts) {
    return static_cast<double>(hash_key(parts) >> 11) * 0x1.0p-53;
}

double exp1(std::initializer_list<std::uint64_t> parts) {
    return -std::log1p(-u01(parts));
}

// Poisson(mean) as the number of unit-exponential arrivals within [0, mean].
std::int64_t poisson_count(std::uint64_t seed, double mean) {
    double acc = 0.0;
    std::int64_t n = 0;
    while (true) {
        acc += exp1({seed, kClusterCount, static_cast<std::uint64_t>(n)});
        if (acc > mean) return n;
        ++n;
    }
}

TorusPoint companion_of(const ClusterTimeline& c, double r) {
    return {c.center.x + r * std::cos(c.companion_angle),
            c.center.y + r * std::sin(c.companion_angle)};
}

double axis_distance(double a, double b, double l) {
    double d = std::abs(a - b);
    if (l > 0.0) {
        d = std::fmod(d, l);
        d = std::min(d, l - d);
    }
    return d;
}

struct Reception {
    TorusPoint position;   // receiver location
    std::uint64_t rx_node; // 0 = center, 1 = companion
    double signal_fading;
    bool full_duplex;
};

}  // namespace

double match_density(double lambda, double d, double b) {
    if (!(lambda > 0.0) || !(d > 0.0) || !(b >= 0.0))
        throw std::domain_error("match_density: requires lambda > 0, d > 0, b >= 0");
    return lambda * (d + b);
}

double torus_distance(TorusPoint a, TorusPoint b, double l) {
    const double dx = axis_distance(a.x, b.x, l);
    const double dy = axis_distance(a.y, b.y, l);
    return std::hypot(dx, dy);
}

double time_average_interference(TorusPoint receiver, double own_start, double own_duration,
                                 std::span<const Interferer> interferers, double alpha,
                                 double wrap_side) {
    if (!(own_duration > 0.0))
        throw std::domain_error("time_average_interference: own_duration must be > 0");
    const double own_end = own_start + own_duration;
    double total = 0.0;
    for (const Interferer& it : interferers) {
        const double overlap =
            std::min(own_end, it.start + it.duration) - std::max(own_start, it.start);
        if (overlap <= 0.0) continue;
        const double dist = torus_distance(receiver, it.position, wrap_side);
        total += it.fading * std::pow(dist, -alpha) * (overlap / own_duration);
    }
    return total;
}

double resolve_warmup(const DurationConfig& dur, const SimConfig& sim) {
    if (sim.warmup >= 0.0) return sim.warmup;
    return 2.0 * (std::max(dur.d, dur.gamma * dur.d) + sim.backoff_mean);
}

void validate_sim(const SystemParams& p, const DurationConfig& dur, const SimConfig& sim) {
    validate(p);
    validate(dur);
    if (!(sim.window_side > 10.0 * p.r))
        throw std::domain_error("invalid sim config: window_side must exceed 10 r");
    if (!(sim.backoff_mean >= 0.0))
        throw std::domain_error("invalid sim config: backoff_mean must be >= 0");
    if (!(sim.measure_time > 0.0))
        throw std::domain_error("invalid sim config: measure_time must be > 0");
    const double warm = resolve_warmup(dur, sim);
    if (!(warm >= 2.0 * (dur.d + sim.backoff_mean)))
        throw std::domain_error("invalid sim config: warmup must be >= 2 (d + backoff_mean)");
    if (sim.replications < 1)
        throw std::domain_error("invalid sim config: replications must be >= 1");
}

Scenario generate_scenario(const SystemParams& p, DuplexMix mix, const DurationConfig& dur,
                           const SimConfig& sim, std::uint64_t seed) {
    validate_sim(p, dur, sim);
    validate(mix);

    const double l = sim.window_side;
    const double horizon = resolve_warmup(dur, sim) + sim.measure_time;
    const double mean_duration = (1.0 - mix.q) * dur.d + mix.q * dur.gamma * dur.d;
    const double mean_cycle = mean_duration + sim.backoff_mean;
    const double density = match_density(p.lambda, mean_duration, sim.backoff_mean);

    Scenario sc;
    sc.window_side = l;
    sc.link_distance = p.r;
    const std::int64_t n = poisson_count(seed, density * l * l);
    sc.clusters.resize(static_cast<std::size_t>(n));

    for (std::int64_t c = 0; c < n; ++c) {
        const auto ci = static_cast<std::uint64_t>(c);
        ClusterTimeline& cl = sc.clusters[static_cast<std::size_t>(c)];
        cl.center = {u01({seed, kPositionX, ci}) * l, u01({seed, kPositionY, ci}) * l};
        cl.companion_angle = u01({seed, kAngle, ci}) * 2.0 * std::numbers::pi;

        double t = u01({seed, kPhase, ci}) * mean_cycle;
        std::int32_t ev = 0;
        while (t < horizon) {
            const auto ei = static_cast<std::uint64_t>(ev);
            const bool fd = u01({seed, kMode, ci, ei}) < mix.q;
            const double duration = fd ? dur.gamma * dur.d : dur.d;
            cl.transmissions.push_back({t, duration, fd, ev});
            t += duration + 2.0 * sim.backoff_mean * u01({seed, kBackoff, ci, ei});
            ++ev;
        }
    }
    return sc;
}

ReplicationCounts evaluate_scenario(const Scenario& sc, const SystemParams& p,
                                    const SimConfig& sim, std::uint64_t seed) {
    if (!(sim.warmup >= 0.0))
        throw std::domain_error("evaluate_scenario: requires a resolved (>= 0) warmup");
    const double l = sc.window_side;
    const double r = sc.link_distance;
    double max_dur = 0.0;
    for (const ClusterTimeline& cl : sc.clusters)
        for (const Transmission& tx : cl.transmissions) max_dur = std::max(max_dur, tx.duration);

    const double measure_begin = sim.warmup;
    const double measure_end = measure_begin + sim.measure_time;

    const double self_interference = 1.0 - p.eta;
    const double signal_loss = std::pow(r, -p.alpha);

    ReplicationCounts counts;

    const auto n = static_cast<std::int64_t>(sc.clusters.size());
    for (std::int64_t c = 0; c < n; ++c) {
        const ClusterTimeline& own = sc.clusters[static_cast<std::size_t>(c)];
        const TorusPoint nodes_own[2] = {own.center, companion_of(own, r)};

        for (const Transmission& tx : own.transmissions) {
            const double end = tx.start + tx.duration;
            if (!(end >= measure_begin && end < measure_end)) continue;

            // Directions evaluated: centre -> companion always; companion ->
            // centre only for full-duplex exchanges.
            Reception receptions[2];
            int n_rx = 0;
            receptions[n_rx++] = {nodes_own[1], 1,
                                  exp1({seed, kFading, static_cast<std::uint64_t>(c),
                                        static_cast<std::uint64_t>(tx.event), 0,
                                        static_cast<std::uint64_t>(c), 1}),
                                  tx.full_duplex};
            if (tx.full_duplex)
                receptions[n_rx++] = {nodes_own[0], 0,
                                      exp1({seed, kFading, static_cast<std::uint64_t>(c),
                                            static_cast<std::uint64_t>(tx.event), 1,
                                            static_cast<std::uint64_t>(c), 0}),
                                      true};

            for (int k = 0; k < n_rx; ++k) {
                const Reception& rx = receptions[k];
                double interference = 0.0;

                for (std::int64_t c2 = 0; c2 < n; ++c2) {
                    if (c2 == c) continue;
                    const ClusterTimeline& other = sc.clusters[static_cast<std::size_t>(c2)];
                    if (other.transmissions.empty()) continue;
                    const TorusPoint nodes[2] = {other.center, companion_of(other, r)};
                    double dist[2] = {-1.0, -1.0};

                    // First transmission that can still overlap [tx.start, end).
                    auto it = std::lower_bound(
                        other.transmissions.begin(), other.transmissions.end(),
                        tx.start - max_dur,
                        [](const Transmission& a, double t) { return a.start < t; });
                    for (; it != other.transmissions.end() && it->start < end; ++it) {
                        const double overlap =
                            std::min(end, it->start + it->duration) -
                            std::max(tx.start, it->start);
                        if (overlap <= 0.0) continue;
                        const double frac = overlap / tx.duration;
                        const int n_src = it->full_duplex ? 2 : 1;
                        for (int s = 0; s < n_src; ++s) {
                            if (dist[s] < 0.0)
                                dist[s] = torus_distance(nodes[s], rx.position, l);
                            const double fading =
                                exp1({seed, kFading, static_cast<std::uint64_t>(c2),
                                      static_cast<std::uint64_t>(it->event),
                                      static_cast<std::uint64_t>(s),
                                      static_cast<std::uint64_t>(c), rx.rx_node});
                            interference += fading * std::pow(dist[s], -p.alpha) * frac;
                        }
                    }
                }

                const double denom =
                    interference + (rx.full_duplex ? self_interference : 0.0);
                const double sir_ok = rx.signal_fading * signal_loss - p.theta * denom;
                ++counts.attempts;
                if (sir_ok >= 0.0) {
                    if (rx.full_duplex)
                        ++counts.successes_fd;
                    else
                        ++counts.successes_hd;
                    counts.delivered_bits += p.w * tx.duration;
                }
            }
        }
    }

    counts.throughput = counts.delivered_bits / (l * l * sim.measure_time);
    return counts;
}

ReplicationCounts run_replication(const SystemParams& p, DuplexMix mix,
                                  const DurationConfig& dur, const SimConfig& sim,
                                  std::uint64_t seed) {
    const Scenario sc = generate_scenario(p, mix, dur, sim, seed);
    SimConfig resolved = sim;
    resolved.warmup = resolve_warmup(dur, sim);
    return evaluate_scenario(sc, p, resolved, seed);
}

std::vector<ReplicationCounts> run_all_replications(const SystemParams& p, DuplexMix mix,
                                                    const DurationConfig& dur,
                                                    const SimConfig& sim) {
    validate_sim(p, dur, sim);
    const int n = sim.replications;
    std::vector<ReplicationCounts> out(static_cast<std::size_t>(n));

    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(n)));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    std::atomic<int> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&]() {
            while (true) {
                const int i = next.fetch_add(1);
                if (i >= n) break;
                out[static_cast<std::size_t>(i)] = run_replication(
                    p, mix, dur, sim, sim.base_seed + static_cast<std::uint64_t>(i));
            }
        }));
    }
    for (auto& f : futures) f.get();
    return out;
}

SimEstimate estimate_throughput(const SystemParams& p, DuplexMix mix,
                                const DurationConfig& dur, const SimConfig& sim) {
    const std::vector<ReplicationCounts> reps = run_all_replications(p, mix, dur, sim);

    SimEstimate est;
    double sum = 0.0;
    for (const ReplicationCounts& rc : reps) {
        sum += rc.throughput;
        est.attempts += rc.attempts;
        est.successes_hd += rc.successes_hd;
        est.successes_fd += rc.successes_fd;
    }
    const auto n = static_cast<double>(reps.size());
    est.throughput_mean = sum / n;

    if (reps.size() > 1) {
        double ss = 0.0;
        for (const ReplicationCounts& rc : reps) {
            const double d = rc.throughput - est.throughput_mean;
            ss += d * d;
        }
        est.throughput_stderr = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return est;
}

void to_json(nlohmann::json& j, const SimConfig& c) {
    j = nlohmann::json{{"window_side", c.window_side}, {"backoff_mean", c.backoff_mean},
                       {"warmup", c.warmup},           {"measure_time", c.measure_time},
                       {"replications", c.replications}, {"base_seed", c.base_seed}};
}

void from_json(const nlohmann::json& j, SimConfig& c) {
    j.at("window_side").get_to(c.window_side);
    j.at("backoff_mean").get_to(c.backoff_mean);
    if (j.contains("warmup")) j.at("warmup").get_to(c.warmup);
    j.at("measure_time").get_to(c.measure_time);
    j.at("replications").get_to(c.replications);
    j.at("base_seed").get_to(c.base_seed);
}

}  // namespace fdaloha
