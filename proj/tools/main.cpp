#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uavbs/harness.hpp"

namespace {

/* Assemble a custom environment from --a/--b/--eta-los/--eta-nlos; all
 * four must be given together. */
std::optional<uavbs::Environment> custom_env(const CLI::App* sub, double a, double b,
                                             double eta_los, double eta_nlos) {
    const int given = static_cast<int>(sub->count("--a")) + static_cast<int>(sub->count("--b")) +
                      static_cast<int>(sub->count("--eta-los")) +
                      static_cast<int>(sub->count("--eta-nlos"));
    if (given == 0) return std::nullopt;
    if (given != 4)
        throw uavbs::DataError(
            "a custom environment needs all of --a, --b, --eta-los, --eta-nlos");
    uavbs::Environment env{"custom", a, b, eta_los, eta_nlos};
    env.validate();
    return env;
}

uavbs::Region region_from(const std::vector<double>& bounds) {
    uavbs::Region region{bounds[0], bounds[1], bounds[2], bounds[3]};
    region.validate();
    return region;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"UAV base-station placement: energy-efficient 3D positioning and "
                 "coverage experiments"};
    app.require_subcommand(1);

    /* ---- angle ---- */
    auto* angle = app.add_subcommand(
        "angle", "Loss-optimal elevation angle for an environment");
    std::string angle_env = "urban";
    double ca = 0, cb = 0, celos = 0, cenlos = 0;
    angle->add_option("--env", angle_env,
                      "Environment preset name, or 'custom' with --a/--b/--eta-los/--eta-nlos");
    angle->add_option("--a", ca, "Custom sigmoid offset");
    angle->add_option("--b", cb, "Custom sigmoid slope (per degree)");
    angle->add_option("--eta-los", celos, "Custom LoS excess loss (dB)");
    angle->add_option("--eta-nlos", cenlos, "Custom NLoS excess loss (dB)");

    /* ---- radius-curve ---- */
    auto* curve = app.add_subcommand(
        "radius-curve", "Coverage radius versus altitude (CSV)");
    std::vector<std::string> curve_envs{"urban"};
    std::vector<double> curve_budgets{100.0, 103.0};
    double curve_hlo = 50.0, curve_hhi = 3000.0, curve_step = 10.0;
    double curve_fc = 2.0e9;
    std::string curve_out;
    double ra = 0, rb = 0, relos = 0, renlos = 0;
    curve->add_option("--env", curve_envs, "Environment(s); repeatable");
    curve->add_option("--lth", curve_budgets, "Loss budget(s) in dB; repeatable");
    curve->add_option("--h-min", curve_hlo, "Lowest altitude (m)");
    curve->add_option("--h-max", curve_hhi, "Highest altitude (m)");
    curve->add_option("--step", curve_step, "Altitude step (m)");
    curve->add_option("--fc", curve_fc, "Carrier frequency (Hz)");
    curve->add_option("--out", curve_out, "Output CSV path (default stdout)");
    curve->add_option("--a", ra, "Custom sigmoid offset");
    curve->add_option("--b", rb, "Custom sigmoid slope (per degree)");
    curve->add_option("--eta-los", relos, "Custom LoS excess loss (dB)");
    curve->add_option("--eta-nlos", renlos, "Custom NLoS excess loss (dB)");

    /* ---- place ---- */
    auto* place = app.add_subcommand(
        "place", "3D placement for a user file (proposed algorithm or --baseline)");
    std::string place_users, place_env = "urban", place_out;
    std::string place_snapshot;
    std::vector<double> place_region{0.0, 3000.0, 0.0, 3000.0};
    double place_fc = 2.0e9, place_pt = 30.0, place_pmin = -70.0, place_hmin = 100.0;
    bool place_baseline = false;
    std::uint64_t place_seed = 1;
    double pa = 0, pb = 0, pelos = 0, penlos = 0;
    place->add_option("--users", place_users, "User position file (x y per line)")
        ->required();
    place->add_option("--env", place_env, "Environment preset or 'custom'");
    place->add_option("--fc", place_fc, "Carrier frequency (Hz)");
    place->add_option("--pt", place_pt, "Max transmit power (dBm)");
    place->add_option("--pmin", place_pmin, "Receiver sensitivity (dBm)");
    place->add_option("--hmin", place_hmin, "Minimum allowed altitude (m)");
    place->add_option("--region", place_region,
                      "Region bounds: x_min x_max y_min y_max (m)")
        ->expected(4);
    place->add_flag("--baseline", place_baseline,
                    "Random-center baseline at full power instead of the proposed placement");
    place->add_option("--seed", place_seed, "Baseline center seed");
    place->add_option("--snapshot", place_snapshot,
                      "Also write per-user coverage rows to this CSV");
    place->add_option("--out", place_out, "Output CSV path (default stdout)");
    place->add_option("--a", pa, "Custom sigmoid offset");
    place->add_option("--b", pb, "Custom sigmoid slope (per degree)");
    place->add_option("--eta-los", pelos, "Custom LoS excess loss (dB)");
    place->add_option("--eta-nlos", penlos, "Custom NLoS excess loss (dB)");

    /* ---- sweep-cov ---- */
    auto* sweep = app.add_subcommand(
        "sweep-cov", "Monte Carlo coverage/power sweep over CoV bins (CSV)");
    std::string sweep_config;
    std::vector<std::string> sweep_envs;
    std::vector<double> sweep_targets;
    std::string sweep_mode, sweep_out;
    std::uint64_t sweep_seed = 0;
    int sweep_reps = 0, sweep_threads = -1;
    double sweep_sigma = 0, sweep_offspring = 0, sweep_intensity = 0, sweep_binw = 0;
    bool sweep_quiet = false;
    sweep->add_option("--config", sweep_config,
                      "Scenario config file (default: $UAVBS_CONFIG if set)");
    sweep->add_option("--envs", sweep_envs, "Override environments (presets)");
    sweep->add_option("--cov-targets", sweep_targets, "Override CoV targets");
    sweep->add_option("--mode", sweep_mode, "calibrated | measured");
    sweep->add_option("--base-seed", sweep_seed, "Override base seed");
    sweep->add_option("--replications", sweep_reps, "Override replications per bin");
    sweep->add_option("--threads", sweep_threads, "Worker threads (0 = all)");
    sweep->add_option("--sigma", sweep_sigma, "Override cluster spread (m)");
    sweep->add_option("--offspring", sweep_offspring, "Override mean offspring per cluster");
    sweep->add_option("--intensity", sweep_intensity,
                      "Override total user intensity (users/km^2)");
    sweep->add_option("--bin-width", sweep_binw, "Measured-mode CoV bin width");
    sweep->add_option("--out", sweep_out, "Output CSV path (default stdout)");
    sweep->add_flag("--quiet", sweep_quiet, "Suppress progress lines on stderr");

    /* ---- gen-users ---- */
    auto* gen = app.add_subcommand(
        "gen-users", "Sample a clustered user pattern to the placement file format");
    std::vector<double> gen_region{0.0, 3000.0, 0.0, 3000.0};
    double gen_intensity = 9.0, gen_offspring = 55.0, gen_sigma = 150.0;
    double gen_target_cov = 0.0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--region", gen_region, "Region bounds: x_min x_max y_min y_max (m)")
        ->expected(4);
    gen->add_option("--intensity", gen_intensity, "Total user intensity (users/km^2)");
    gen->add_option("--offspring", gen_offspring, "Mean offspring per cluster");
    gen->add_option("--sigma", gen_sigma, "Cluster spread (m)");
    gen->add_option("--target-cov", gen_target_cov,
                    "Calibrate sigma to this CoV before sampling");
    gen->add_option("--seed", gen_seed, "Sample seed");
    gen->add_option("--out", gen_out, "Output file path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 1;
    }

    try {
        if (angle->parsed()) {
            uavbs::AngleOptions opt;
            opt.env_name = angle_env;
            opt.custom = custom_env(angle, ca, cb, celos, cenlos);
            uavbs::cmd_angle(opt, std::cout);
        } else if (curve->parsed()) {
            uavbs::RadiusCurveOptions opt;
            opt.env_names = curve_envs;
            opt.custom = custom_env(curve, ra, rb, relos, renlos);
            opt.radio.carrier_hz = curve_fc;
            opt.loss_budgets_db = curve_budgets;
            opt.h_lo_m = curve_hlo;
            opt.h_hi_m = curve_hhi;
            opt.step_m = curve_step;
            opt.output = curve_out;
            uavbs::cmd_radius_curve(opt, std::cout);
        } else if (place->parsed()) {
            uavbs::PlaceOptions opt;
            opt.users_path = place_users;
            opt.env_name = place_env;
            opt.custom = custom_env(place, pa, pb, pelos, penlos);
            opt.radio = {place_fc, place_pt, place_pmin, place_hmin};
            opt.region = region_from(place_region);
            opt.baseline = place_baseline;
            opt.seed = place_seed;
            if (!place_snapshot.empty()) opt.snapshot_path = place_snapshot;
            opt.output = place_out;
            uavbs::cmd_place(opt, std::cout);
        } else if (sweep->parsed()) {
            if (sweep_config.empty()) {
                if (const char* env_path = std::getenv("UAVBS_CONFIG"))
                    sweep_config = env_path;
            }
            uavbs::Scenario sc =
                sweep_config.empty()
                    ? uavbs::scenario_from_config(uavbs::ConfigFile::parse_string(""))
                    : uavbs::scenario_from_config(
                          uavbs::ConfigFile::parse_file(sweep_config));
            if (sweep->count("--envs")) {
                sc.environments.clear();
                for (const std::string& name : sweep_envs)
                    sc.environments.push_back(uavbs::environment_preset(name));
            }
            if (sweep->count("--cov-targets")) sc.cov_targets = sweep_targets;
            if (sweep->count("--mode")) {
                if (sweep_mode == "calibrated") {
                    sc.mode = uavbs::SweepMode::calibrated;
                } else if (sweep_mode == "measured") {
                    sc.mode = uavbs::SweepMode::measured;
                } else {
                    throw uavbs::DataError("--mode must be 'calibrated' or 'measured'");
                }
            }
            if (sweep->count("--base-seed")) sc.base_seed = sweep_seed;
            if (sweep->count("--replications")) sc.replications = sweep_reps;
            if (sweep->count("--threads")) sc.threads = sweep_threads;
            if (sweep->count("--sigma")) sc.process.sigma_m = sweep_sigma;
            if (sweep->count("--offspring")) sc.process.mean_offspring = sweep_offspring;
            if (sweep->count("--intensity"))
                sc.process.total_intensity_per_km2 = sweep_intensity;
            if (sweep->count("--bin-width")) sc.bin_width = sweep_binw;
            if (sweep->count("--out")) sc.output = sweep_out;
            uavbs::cmd_sweep_cov(sc, std::cout, sweep_quiet ? nullptr : &std::cerr);
        } else if (gen->parsed()) {
            uavbs::GenUsersOptions opt;
            opt.region = region_from(gen_region);
            opt.process.total_intensity_per_km2 = gen_intensity;
            opt.process.mean_offspring = gen_offspring;
            opt.process.sigma_m = gen_sigma;
            if (gen->count("--target-cov")) opt.target_cov = gen_target_cov;
            opt.seed = gen_seed;
            opt.output = gen_out;
            uavbs::cmd_gen_users(opt, std::cout);
        }
        return 0;
    } catch (const uavbs::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const uavbs::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
