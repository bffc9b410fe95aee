#pragma once

#include <json.hpp>

namespace fdaloha {

/// Physical/protocol parameters shared by every formula in the toolkit.
///
/// All quantities are expressed in normalized units (unit area, unit time,
/// unit transmit power). `lambda` is the space-time density of link
/// activations: transmission starts per unit area per unit time.
struct SystemParams {
    double lambda = 0.05;  ///< space-time link density (> 0)
    double r = 1.0;        ///< transmitter-receiver distance within a cluster (>= 1)
    double alpha = 4.0;    ///< path-loss exponent (> 2)
    double theta = 2.0;    ///< SIR decoding threshold, linear scale (> 0)
    double eta = 1.0;      ///< self-interference cancellation efficiency in [0, 1]
    double w = 1.0;        ///< information bitrate (> 0)
};

/// Fraction of clusters operating full-duplex.
struct DuplexMix {
    double q = 0.0;  ///< in [0, 1]
};

/// Packet durations: half-duplex links last `d`, full-duplex ones `gamma * d`.
struct DurationConfig {
    double d = 1.0;      ///< half-duplex packet duration (> 0)
    double gamma = 1.0;  ///< full/half duplex duration ratio (> 0); 1 = homogeneous
};

/// Checks every invariant; throws std::domain_error naming the first
/// violated one. Returns the input unchanged when all hold.
SystemParams validate(const SystemParams& p);
DuplexMix validate(const DuplexMix& m);
DurationConfig validate(const DurationConfig& c);

/// Residual self-interference factor beta = exp(-(1-eta) * theta * r^alpha).
/// Equals 1 under perfect cancellation and multiplies the full-duplex
/// success probability.
double beta_coeff(const SystemParams& p);

void to_json(nlohmann::json& j, const SystemParams& p);
void from_json(const nlohmann::json& j, SystemParams& p);
void to_json(nlohmann::json& j, const DuplexMix& m);
void from_json(const nlohmann::json& j, DuplexMix& m);
void to_json(nlohmann::json& j, const DurationConfig& c);
void from_json(const nlohmann::json& j, DurationConfig& c);

}  // namespace fdaloha
