#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fdaloha/model.hpp"

namespace fdaloha {

/// Event-level simulator geometry and replication plan. The simulated
/// network is a square torus of side window_side populated by persistent
/// clusters that alternate transmissions and random backoffs (renewal
/// Aloha). Backoffs are drawn uniformly with mean backoff_mean, so a
/// cluster's mean cycle is duration + backoff_mean; the spatial density is
/// matched to the analytical space-time density via match_density.
struct SimConfig {
    double window_side = 40.0;   ///< torus side L; must exceed 10 r
    double backoff_mean = 14.0;  ///< mean backoff B; draws are uniform on [0, 2B]
    double warmup = -1.0;        ///< time before measurement; < 0 selects 2 (D_max + B)
    double measure_time = 30.0;  ///< measurement horizon per replication
    int replications = 20;
    std::uint64_t base_seed = 1;
};

struct SimEstimate {
    double throughput_mean = 0.0;
    double throughput_stderr = 0.0;
    std::int64_t attempts = 0;  ///< receptions evaluated (two per full-duplex packet)
    std::int64_t successes_hd = 0;
    std::int64_t successes_fd = 0;
};

struct ReplicationCounts {
    std::int64_t attempts = 0;
    std::int64_t successes_hd = 0;
    std::int64_t successes_fd = 0;
    double delivered_bits = 0.0;  ///< sum of W * duration over successful receptions
    double throughput = 0.0;      ///< delivered_bits / (L^2 * measure_time)
};

struct TorusPoint {
    double x = 0.0;
    double y = 0.0;
};

struct Transmission {
    double start = 0.0;
    double duration = 0.0;
    bool full_duplex = false;
    std::int32_t event = 0;  ///< per-cluster event index, keys the fading draws
};

/// One cluster's geometry and its complete transmission timeline. The
/// companion node sits at exactly distance r from the center.
struct ClusterTimeline {
    TorusPoint center;
    double companion_angle = 0.0;
    std::vector<Transmission> transmissions;
};

struct Scenario {
    double window_side = 0.0;
    double link_distance = 0.0;
    std::vector<ClusterTimeline> clusters;
};

/// Spatial cluster density lambda' = lambda (d + b) that makes the renewal
/// simulator generate transmission starts at the analytical space-time rate
/// lambda (mean cycle d + b).
double match_density(double lambda, double d, double b);

/// Shortest-path distance on the square torus of side l; plain Euclidean
/// distance when l == 0.
double torus_distance(TorusPoint a, TorusPoint b, double l);

struct Interferer {
    TorusPoint position;
    double fading = 0.0;
    double start = 0.0;
    double duration = 0.0;
};

/// Sum over interferers of fading * distance^-alpha * (overlap of their
/// window with [own_start, own_start + own_duration]) / own_duration.
double time_average_interference(TorusPoint receiver, double own_start, double own_duration,
                                 std::span<const Interferer> interferers, double alpha,
                                 double wrap_side = 0.0);

/// Draws the Poisson cluster population and every cluster's timeline for one
/// replication: positions and companion angles uniform, initial phase uniform
/// over one mean cycle, duplex mode redrawn independently at each
/// transmission start (full-duplex with probability q, duration gamma d).
/// Fully determined by the seed.
Scenario generate_scenario(const SystemParams& p, DuplexMix mix, const DurationConfig& dur,
                           const SimConfig& sim, std::uint64_t seed);

/// Evaluates every packet ending inside the measurement window: per-pair
/// exponential fading (drawn once per transmission/receiver pair from a
/// counter-based stream), time-averaged interference over the packet window,
/// and threshold decoding with the residual self-interference term (1 - eta)
/// added at full-duplex receivers.
ReplicationCounts evaluate_scenario(const Scenario& sc, const SystemParams& p,
                                    const SimConfig& sim, std::uint64_t seed);

/// generate_scenario + evaluate_scenario with the same seed; bit-identical
/// counts for identical inputs.
ReplicationCounts run_replication(const SystemParams& p, DuplexMix mix,
                                  const DurationConfig& dur, const SimConfig& sim,
                                  std::uint64_t seed);

/// Runs sim.replications replications with seeds base_seed + i (concurrently;
/// aggregation in index order) and reports the sample mean and standard error
/// of the throughput estimate.
SimEstimate estimate_throughput(const SystemParams& p, DuplexMix mix,
                                const DurationConfig& dur, const SimConfig& sim);

/// Per-replication counts for external analysis (same seeding scheme).
std::vector<ReplicationCounts> run_all_replications(const SystemParams& p, DuplexMix mix,
                                                    const DurationConfig& dur,
                                                    const SimConfig& sim);

/// Resolved warmup time: sim.warmup if nonnegative, else 2 (D_max + B).
double resolve_warmup(const DurationConfig& dur, const SimConfig& sim);

/// Validates simulator configuration against the network parameters; throws
/// std::domain_error on the first violated invariant.
void validate_sim(const SystemParams& p, const DurationConfig& dur, const SimConfig& sim);

void to_json(nlohmann::json& j, const SimConfig& c);
void from_json(const nlohmann::json& j, SimConfig& c);

}  // namespace fdaloha
