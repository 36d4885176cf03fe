#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uavbs/channel.hpp"
#include "uavbs/config.hpp"
#include "uavbs/placement.hpp"
#include "uavbs/spatial.hpp"

namespace uavbs {

/* How sweep replications map to CoV bins: "calibrated" finds a sigma per
 * CoV target and labels rows by target; "measured" keeps the configured
 * sigma and bins replications by their measured CoV. */
enum class SweepMode { calibrated, measured };

struct Scenario {
    Region region{0.0, 3000.0, 0.0, 3000.0};
    std::vector<Environment> environments;  // resolved before running
    RadioConfig radio;
    ThomasParams process;
    std::optional<std::string> users_file;  // fixed user set instead of sampling
    std::uint64_t base_seed = 1;
    int replications = 500;
    std::vector<double> cov_targets{1, 2, 3, 4, 5, 6, 7};
    SweepMode mode = SweepMode::calibrated;
    double bin_width = 0.5;
    int threads = 0;  // 0 = all hardware threads
    CalibrationOptions calibration;
    std::string output;  // CSV path; empty = stdout

    void validate() const;
};

/* Build a Scenario from a config file; unknown keys are rejected with
 * their file:line location.  See README for the key reference. */
Scenario scenario_from_config(const ConfigFile& cfg);

/* One plotted point of the coverage/power-versus-heterogeneity experiment:
 * per-environment per-CoV-bin Monte Carlo means with standard errors.
 * Replications that draw zero users count as zero covered for both
 * methods but cannot define a required power, so the power mean carries
 * its own denominator. */
struct SweepRecord {
    std::string env;
    double cov_bin = 0.0;            // target (calibrated) or bin center (measured)
    double sigma_m = 0.0;            // cluster spread used for this bin
    double mean_cov_measured = 0.0;  // mean CoV over measurable replications
    double mean_p_req_dbm = 0.0;
    double se_p_req_dbm = 0.0;
    double mean_covered = 0.0;
    double se_covered = 0.0;
    double mean_covered_baseline = 0.0;
    double se_covered_baseline = 0.0;
    long replications = 0;        // denominator of the covered-user means
    long power_replications = 0;  // denominator of the power mean
};

/* Run the Monte Carlo sweep.  Unreachable CoV targets are reported on
 * `progress` (when non-null) and skipped; the run continues.  Output is a
 * pure function of the scenario (including base_seed), independent of the
 * thread count. */
std::vector<SweepRecord> run_sweep(const Scenario& scenario,
                                   std::ostream* progress = nullptr);

void write_sweep_csv(std::ostream& out, const Scenario& scenario,
                     std::span<const SweepRecord> records);

/* Coverage radius versus altitude, one row per altitude step per loss
 * budget, plus a marker row at the analytic optimum (h1, R1). */
struct RadiusCurveRow {
    std::string env;
    double loss_budget_db = 0.0;
    double altitude_m = 0.0;
    double radius_m = 0.0;
    bool optimum = false;  // analytic-optimum marker row
};

std::vector<RadiusCurveRow> radius_curve(const Environment& env, const RadioConfig& radio,
                                         std::span<const double> loss_budgets_db,
                                         double h_lo_m, double h_hi_m, double step_m);

void write_radius_curve_csv(std::ostream& out, std::span<const RadiusCurveRow> rows);

/* Flat placement record (one row) and the per-user snapshot that lets a
 * plot reconstruct both coverage disks. */
void write_placement_csv(std::ostream& out, const Placement3D& placement);
void write_snapshot_csv(std::ostream& out, std::span<const Point2D> users,
                        const PlacementTrace& trace);

/* ---- CLI command entry points (flag parsing lives in the tool) --------- */

struct AngleOptions {
    std::string env_name = "urban";
    std::optional<Environment> custom;  // used when env_name == "custom"
};
void cmd_angle(const AngleOptions& opt, std::ostream& out);

struct RadiusCurveOptions {
    std::vector<std::string> env_names{"urban"};
    std::optional<Environment> custom;
    RadioConfig radio;
    std::vector<double> loss_budgets_db{100.0, 103.0};
    double h_lo_m = 50.0;
    double h_hi_m = 3000.0;
    double step_m = 10.0;
    std::string output;  // empty = stdout
};
void cmd_radius_curve(const RadiusCurveOptions& opt, std::ostream& fallback_out);

struct PlaceOptions {
    std::string users_path;
    std::string env_name = "urban";
    std::optional<Environment> custom;
    RadioConfig radio;
    Region region{0.0, 3000.0, 0.0, 3000.0};
    bool baseline = false;       // run the random baseline instead
    std::uint64_t seed = 1;      // baseline center seed
    std::optional<std::string> snapshot_path;
    std::string output;  // empty = stdout
};
void cmd_place(const PlaceOptions& opt, std::ostream& fallback_out);

void cmd_sweep_cov(const Scenario& scenario, std::ostream& fallback_out,
                   std::ostream* progress);

struct GenUsersOptions {
    Region region{0.0, 3000.0, 0.0, 3000.0};
    ThomasParams process;
    std::optional<double> target_cov;  // calibrate sigma first when set
    std::uint64_t seed = 1;
    std::string output;  // empty = stdout
};
void cmd_gen_users(const GenUsersOptions& opt, std::ostream& fallback_out);

/* Fixed-format float for CSV cells: 6 significant digits, locale-free. */
std::string format_g6(double v);

}  // namespace uavbs
