#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fdaloha/model.hpp"
#include "fdaloha/montecarlo.hpp"
#include "fdaloha/quadrature.hpp"

namespace fdaloha {

/// Tabular result of a figure/sweep/table command: named numeric series of
/// equal length plus a metadata block sufficient to re-run the computation.
struct CurveData {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  ///< rows[i].size() == columns.size()
    nlohmann::json metadata;
};

/// CSV with the metadata JSON on leading "# " comment lines. Numeric
/// formatting is fixed (%.12g) so identical inputs produce identical bytes.
void write_csv(const CurveData& data, std::ostream& out);
void write_csv_file(const CurveData& data, const std::string& path);

enum class SweepVariable { d, q, load, r, gamma, theta, alpha, eta };

SweepVariable sweep_variable_from_name(const std::string& name);

struct SweepRange {
    double min = 0.0;
    double max = 1.0;
    int steps = 2;
    bool log_scale = false;
};

struct SweepSpec {
    SweepVariable variable = SweepVariable::d;
    SweepRange range;
    SystemParams params;
    DuplexMix mix;
    DurationConfig dur;
};

/// Grid values of the sweep (inclusive endpoints; log_scale spaces them
/// geometrically). Throws std::domain_error unless min < max and steps >= 2.
std::vector<double> sweep_grid(const SweepRange& range);

/// Evaluates the named metrics along the sweep. Known metrics:
/// throughput, throughput_hetero, throughput_slotted, success_hd, success_fd,
/// q_star, gamma_star, chi_gain, delta, beta, eta_min, xi_homogeneous,
/// xi_optimized, omega_hd, omega_fd, omega_hd_prime, omega_fd_prime.
/// Unknown names throw std::invalid_argument.
CurveData sweep_data(const SweepSpec& spec, const std::vector<std::string>& metrics,
                     const QuadConfig& quad = {});

struct FigureOptions {
    SystemParams params;
    DuplexMix mix;        ///< used by figures parameterized by a single q
    DurationConfig dur;
    QuadConfig quad;
    bool with_sim = false;  ///< figure 3: add Monte Carlo columns
    SimConfig sim;
};

/// Data behind the numbered result figures (2..11); throws
/// std::invalid_argument for unsupported ids.
CurveData figure_data(int fig_id, const FigureOptions& opt);

/// delta(theta, alpha) table with quadrature error columns.
CurveData tables_data(const std::vector<double>& theta_list,
                      const std::vector<double>& alpha_list, const QuadConfig& quad = {});

struct ValidationCell {
    double q = 0.0;
    double d = 0.0;
    double gamma = 1.0;
    double analytic = 0.0;
    SimEstimate sim;
    double z = 0.0;  ///< (sim mean - analytic) / sim stderr
};

struct ValidationReport {
    std::vector<ValidationCell> cells;
    bool low_power = false;  ///< fewer than 2 replications: no stderr, z undefined
    double worst_abs_z = 0.0;
};

/// Monte Carlo vs analytic comparison over a (q, d) grid at fixed gamma.
ValidationReport run_validation(const SystemParams& params, const std::vector<double>& qs,
                                const std::vector<double>& ds, double gamma,
                                const SimConfig& sim, const QuadConfig& quad = {});

CurveData validation_curve(const ValidationReport& report, const SystemParams& params,
                           const SimConfig& sim, const QuadConfig& quad);

/// Per-replication counts as CSV rows (replication, attempts, successes_hd,
/// successes_fd, delivered_bits, throughput).
CurveData replication_curve(const std::vector<ReplicationCounts>& reps,
                            const SystemParams& params, DuplexMix mix,
                            const DurationConfig& dur, const SimConfig& sim);

}  // namespace fdaloha
