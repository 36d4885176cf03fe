#include "uavbs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <thread>

#include "uavbs/users_io.hpp"

namespace uavbs {

std::string format_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

std::string format_g10(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

/* Resolve an environment by name against the preset table, with "custom"
 * naming an inline override. */
Environment resolve_environment(const std::string& name,
                                const std::optional<Environment>& custom) {
    if (custom && (name == custom->name || name == "custom")) {
        Environment env = *custom;
        env.validate();
        return env;
    }
    return environment_preset(name);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw DataError("cannot write output file '" + path + "'");
    return out;
}

void parallel_for(int n, int threads, const std::function<void(int)>& body) {
    int t = threads > 0 ? threads
                        : static_cast<int>(std::thread::hardware_concurrency());
    t = std::clamp(t, 1, 64);
    if (t == 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
    for (std::thread& th : pool) th.join();
}

/* ---- sweep internals ---------------------------------------------------- */

struct EnvOutcome {
    int covered = 0;
    int baseline_covered = 0;
    std::optional<double> p_req_dbm;  // absent when the draw had no users
};

struct RepOutcome {
    std::size_t n_users = 0;
    std::optional<double> cov;  // absent when not measurable (< 3 points etc.)
    std::vector<EnvOutcome> envs;
    std::string error;
};

/* Run one batch of replications at a fixed sigma.  Seeds are
 * base_seed + global replication index; outcomes are stored by index, so
 * the result is independent of scheduling. */
std::vector<RepOutcome> run_replications(const Scenario& sc, double sigma_m,
                                         int bin_index,
                                         const std::vector<Point2D>* fixed_users) {
    ThomasParams params = sc.process;
    params.sigma_m = sigma_m;

    std::vector<RepOutcome> reps(static_cast<std::size_t>(sc.replications));
    parallel_for(sc.replications, sc.threads, [&](int r) {
        RepOutcome& out = reps[static_cast<std::size_t>(r)];
        out.envs.resize(sc.environments.size());
        try {
            const std::uint64_t rep_seed =
                sc.base_seed +
                static_cast<std::uint64_t>(bin_index) *
                    static_cast<std::uint64_t>(sc.replications) +
                static_cast<std::uint64_t>(r);

            std::vector<Point2D> sampled;
            const std::vector<Point2D>* users = fixed_users;
            if (!users) {
                Rng rng(rep_seed);
                sampled = sample_thomas(sc.region, params, rng);
                users = &sampled;
            }
            out.n_users = users->size();

            if (users->size() >= 3) {
                try {
                    out.cov = voronoi_cov(*users, sc.region);
                } catch (const DataError&) {
                    /* collinear or duplicated draw: CoV not measurable */
                }
            }

            for (std::size_t ei = 0; ei < sc.environments.size(); ++ei) {
                EnvOutcome& eo = out.envs[ei];
                if (!users->empty()) {
                    const Placement3D placed =
                        place_3d(*users, sc.environments[ei], sc.radio);
                    eo.covered = static_cast<int>(placed.covered.size());
                    eo.p_req_dbm = placed.required_power_dbm;
                }
                /* Identical seed for every environment, so the baseline
                 * center is common across environments within a replication. */
                Rng baseline_rng(mix64(rep_seed) ^ 0xba5e11e5ULL);
                const Placement3D base = random_baseline(
                    *users, sc.environments[ei], sc.radio, sc.region, baseline_rng);
                eo.baseline_covered = static_cast<int>(base.covered.size());
            }
        } catch (const std::exception& e) {
            out.error = e.what();
        }
    });

    for (std::size_t r = 0; r < reps.size(); ++r) {
        if (!reps[r].error.empty())
            throw NumericError("replication " + std::to_string(r) + " failed: " +
                               reps[r].error);
    }
    return reps;
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
    long n = 0;
};

MeanSe mean_and_se(const std::vector<double>& xs) {
    MeanSe out;
    out.n = static_cast<long>(xs.size());
    if (out.n == 0) return out;
    double sum = 0.0;
    for (double x : xs) sum += x;
    out.mean = sum / static_cast<double>(out.n);
    if (out.n > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.se = std::sqrt(ss / static_cast<double>(out.n - 1)) /
                 std::sqrt(static_cast<double>(out.n));
    }
    return out;
}

SweepRecord aggregate_env(const std::string& env_name, double bin_label, double sigma_m,
                          const std::vector<const RepOutcome*>& reps, std::size_t ei) {
    std::vector<double> covered, baseline, power, covs;
    covered.reserve(reps.size());
    baseline.reserve(reps.size());
    power.reserve(reps.size());
    for (const RepOutcome* rep : reps) {
        covered.push_back(rep->envs[ei].covered);
        baseline.push_back(rep->envs[ei].baseline_covered);
        if (rep->envs[ei].p_req_dbm) power.push_back(*rep->envs[ei].p_req_dbm);
        if (rep->cov) covs.push_back(*rep->cov);
    }

    SweepRecord rec;
    rec.env = env_name;
    rec.cov_bin = bin_label;
    rec.sigma_m = sigma_m;
    const MeanSe c = mean_and_se(covered);
    const MeanSe b = mean_and_se(baseline);
    const MeanSe p = mean_and_se(power);
    const MeanSe v = mean_and_se(covs);
    rec.mean_covered = c.mean;
    rec.se_covered = c.se;
    rec.mean_covered_baseline = b.mean;
    rec.se_covered_baseline = b.se;
    rec.mean_p_req_dbm = p.mean;
    rec.se_p_req_dbm = p.se;
    rec.mean_cov_measured = v.mean;
    rec.replications = c.n;
    rec.power_replications = p.n;
    return rec;
}

}  // namespace

void Scenario::validate() const {
    region.validate();
    radio.validate();
    if (environments.empty())
        throw DataError("scenario: at least one environment required");
    for (const Environment& env : environments) env.validate();
    if (!users_file) process.validate();
    if (replications < 1)
        throw DataError("scenario: replications must be >= 1");
    if (mode == SweepMode::calibrated) {
        if (users_file)
            throw DataError("scenario: a fixed user file cannot be calibrated to CoV "
                            "targets; use mode = measured");
        if (cov_targets.empty())
            throw DataError("scenario: cov_targets must be non-empty in calibrated mode");
        for (double t : cov_targets) {
            if (!(t >= 1.0) || !std::isfinite(t))
                throw DataError("scenario: cov targets must be >= 1");
        }
    } else if (!(bin_width > 0.0)) {
        throw DataError("scenario: bin_width must be positive in measured mode");
    }
    if (threads < 0)
        throw DataError("scenario: threads must be >= 0");
}

Scenario scenario_from_config(const ConfigFile& cfg) {
    static const std::vector<std::string> known = {
        "region.x_min", "region.x_max", "region.y_min", "region.y_max",
        "radio.carrier_hz", "radio.tx_power_dbm", "radio.rx_sensitivity_dbm",
        "radio.min_altitude_m",
        "process.total_intensity_per_km2", "process.parent_intensity_per_km2",
        "process.mean_offspring", "process.sigma_m", "process.users_file",
        "sweep.environments", "sweep.base_seed", "sweep.replications",
        "sweep.cov_targets", "sweep.mode", "sweep.bin_width", "sweep.threads",
        "sweep.output",
        "calibration.sigma_floor_m", "calibration.tolerance",
        "calibration.replications", "calibration.max_iterations",
        "environment.name", "environment.s_curve_a", "environment.s_curve_b",
        "environment.excess_los_db", "environment.excess_nlos_db",
    };
    for (const std::string& key : cfg.keys()) {
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw DataError(cfg.location(key) + ": unknown key '" + key + "'");
    }

    Scenario sc;
    sc.region.x_min = cfg.get_double("region.x_min", 0.0);
    sc.region.x_max = cfg.get_double("region.x_max", 3000.0);
    sc.region.y_min = cfg.get_double("region.y_min", 0.0);
    sc.region.y_max = cfg.get_double("region.y_max", 3000.0);

    sc.radio.carrier_hz = cfg.get_double("radio.carrier_hz", 2.0e9);
    sc.radio.tx_power_dbm = cfg.get_double("radio.tx_power_dbm", 30.0);
    sc.radio.rx_sensitivity_dbm = cfg.get_double("radio.rx_sensitivity_dbm", -70.0);
    sc.radio.min_altitude_m = cfg.get_double("radio.min_altitude_m", 100.0);

    if (cfg.has("process.parent_intensity_per_km2") &&
        cfg.has("process.total_intensity_per_km2"))
        throw DataError(cfg.location("process.total_intensity_per_km2") +
                        ": set either total_intensity_per_km2 or "
                        "parent_intensity_per_km2, not both");
    if (cfg.has("process.parent_intensity_per_km2")) {
        sc.process.parent_intensity_per_km2 =
            cfg.get_double("process.parent_intensity_per_km2", 0.0);
        sc.process.total_intensity_per_km2.reset();
    } else {
        sc.process.total_intensity_per_km2 =
            cfg.get_double("process.total_intensity_per_km2", 9.0);
    }
    sc.process.mean_offspring =
        cfg.get_double("process.mean_offspring", sc.process.mean_offspring);
    sc.process.sigma_m = cfg.get_double("process.sigma_m", sc.process.sigma_m);
    if (const auto uf = cfg.get("process.users_file")) sc.users_file = *uf;

    std::optional<Environment> custom;
    if (cfg.has("environment.name") || cfg.has("environment.s_curve_a")) {
        Environment env;
        env.name = cfg.get_string("environment.name", "custom");
        env.s_curve_a = cfg.get_double("environment.s_curve_a", 0.0);
        env.s_curve_b = cfg.get_double("environment.s_curve_b", 0.0);
        env.excess_los_db = cfg.get_double("environment.excess_los_db", 0.0);
        env.excess_nlos_db = cfg.get_double("environment.excess_nlos_db", 0.0);
        env.validate();
        custom = env;
    }
    const std::vector<std::string> env_names =
        cfg.get_string_list("sweep.environments", {"urban", "suburban"});
    for (const std::string& name : env_names) {
        if (custom && name == custom->name) {
            sc.environments.push_back(*custom);
        } else {
            sc.environments.push_back(environment_preset(name));
        }
    }

    sc.base_seed = cfg.get_u64("sweep.base_seed", 1);
    sc.replications = cfg.get_int("sweep.replications", 500);
    sc.cov_targets = cfg.get_double_list("sweep.cov_targets", sc.cov_targets);
    const std::string mode = cfg.get_string("sweep.mode", "calibrated");
    if (mode == "calibrated") {
        sc.mode = SweepMode::calibrated;
    } else if (mode == "measured") {
        sc.mode = SweepMode::measured;
    } else {
        throw DataError(cfg.location("sweep.mode") + ": mode must be 'calibrated' or "
                        "'measured', got '" + mode + "'");
    }
    sc.bin_width = cfg.get_double("sweep.bin_width", 0.5);
    sc.threads = cfg.get_int("sweep.threads", 0);
    sc.output = cfg.get_string("sweep.output", "");

    sc.calibration.sigma_floor_m =
        cfg.get_double("calibration.sigma_floor_m", sc.calibration.sigma_floor_m);
    sc.calibration.tolerance =
        cfg.get_double("calibration.tolerance", sc.calibration.tolerance);
    sc.calibration.replications =
        cfg.get_int("calibration.replications", sc.calibration.replications);
    sc.calibration.max_iterations =
        cfg.get_int("calibration.max_iterations", sc.calibration.max_iterations);

    /* Validation happens in run_sweep, after any CLI flag overrides. */
    return sc;
}

std::vector<SweepRecord> run_sweep(const Scenario& sc, std::ostream* progress) {
    sc.validate();

    std::vector<Point2D> fixed_users;
    const std::vector<Point2D>* fixed = nullptr;
    if (sc.users_file) {
        fixed_users = read_users(*sc.users_file);
        fixed = &fixed_users;
    }

    struct Bin {
        double label;
        double sigma;
        std::vector<const RepOutcome*> reps;
    };
    std::vector<Bin> bins;
    std::vector<std::vector<RepOutcome>> storage;  // keeps RepOutcomes alive

    if (sc.mode == SweepMode::calibrated) {
        for (std::size_t ti = 0; ti < sc.cov_targets.size(); ++ti) {
            const double target = sc.cov_targets[ti];
            Rng calib_rng(mix64(sc.base_seed) ^ mix64(0xca11b000ULL + ti));
            double sigma = 0.0;
            try {
                sigma = calibrate_sigma(sc.region, sc.process, target, calib_rng,
                                        sc.calibration);
            } catch (const NumericError& e) {
                if (progress)
                    *progress << "cov target " << format_g6(target)
                              << ": skipped: " << e.what() << "\n";
                continue;
            }
            if (progress)
                *progress << "cov target " << format_g6(target) << ": sigma = "
                          << format_g6(sigma) << " m, running " << sc.replications
                          << " replications\n";
            storage.push_back(
                run_replications(sc, sigma, static_cast<int>(ti), nullptr));
            Bin bin{target, sigma, {}};
            bin.reps.reserve(storage.back().size());
            for (const RepOutcome& rep : storage.back()) bin.reps.push_back(&rep);
            bins.push_back(std::move(bin));
        }
    } else {
        storage.push_back(run_replications(sc, sc.process.sigma_m, 0, fixed));
        std::map<long, std::vector<const RepOutcome*>> grouped;
        long skipped = 0;
        for (const RepOutcome& rep : storage.back()) {
            if (!rep.cov) {
                ++skipped;
                continue;
            }
            grouped[static_cast<long>(std::floor(*rep.cov / sc.bin_width))].push_back(
                &rep);
        }
        if (progress && skipped > 0)
            *progress << skipped << " replications had no measurable CoV and were "
                      << "left out of the bins\n";
        for (const auto& [key, reps] : grouped) {
            const double center = (static_cast<double>(key) + 0.5) * sc.bin_width;
            bins.push_back({center, fixed ? 0.0 : sc.process.sigma_m, reps});
        }
    }

    std::vector<SweepRecord> records;
    for (std::size_t ei = 0; ei < sc.environments.size(); ++ei) {
        for (const Bin& bin : bins) {
            records.push_back(
                aggregate_env(sc.environments[ei].name, bin.label, bin.sigma, bin.reps, ei));
        }
    }
    return records;
}

void write_sweep_csv(std::ostream& out, const Scenario& sc,
                     std::span<const SweepRecord> records) {
    out << "# coverage/power versus CoV sweep\n";
    out << "# mode = "
        << (sc.mode == SweepMode::calibrated ? "calibrated" : "measured") << "\n";
    out << "# region_m = " << format_g6(sc.region.x_min) << " " << format_g6(sc.region.x_max)
        << " " << format_g6(sc.region.y_min) << " " << format_g6(sc.region.y_max) << "\n";
    out << "# radio = carrier_hz:" << format_g6(sc.radio.carrier_hz)
        << " tx_power_dbm:" << format_g6(sc.radio.tx_power_dbm)
        << " rx_sensitivity_dbm:" << format_g6(sc.radio.rx_sensitivity_dbm)
        << " min_altitude_m:" << format_g6(sc.radio.min_altitude_m) << "\n";
    if (sc.users_file) {
        out << "# users_file = " << *sc.users_file << "\n";
    } else {
        out << "# process = ";
        if (sc.process.total_intensity_per_km2) {
            out << "total_intensity_per_km2:" << format_g6(*sc.process.total_intensity_per_km2);
        } else {
            out << "parent_intensity_per_km2:" << format_g6(sc.process.parent_intensity_per_km2);
        }
        out << " mean_offspring:" << format_g6(sc.process.mean_offspring)
            << " (sigma_m per row)\n";
    }
    out << "# base_seed = " << sc.base_seed << "\n";
    out << "# replications_per_bin = " << sc.replications << "\n";
    if (sc.mode == SweepMode::measured)
        out << "# bin_width = " << format_g6(sc.bin_width) << "\n";
    out << "# note: replication depth, CoV targets, and binning are configuration "
        << "choices of this artifact\n";
    out << "env,cov_bin,sigma_m,mean_cov_measured,mean_p_req_dbm,se_p_req_dbm,"
        << "mean_covered,se_covered,mean_covered_baseline,se_covered_baseline,"
        << "replications,power_replications\n";
    for (const SweepRecord& r : records) {
        out << r.env << "," << format_g6(r.cov_bin) << "," << format_g6(r.sigma_m) << ","
            << format_g6(r.mean_cov_measured) << "," << format_g6(r.mean_p_req_dbm) << ","
            << format_g6(r.se_p_req_dbm) << "," << format_g6(r.mean_covered) << ","
            << format_g6(r.se_covered) << "," << format_g6(r.mean_covered_baseline) << ","
            << format_g6(r.se_covered_baseline) << "," << r.replications << ","
            << r.power_replications << "\n";
    }
}

std::vector<RadiusCurveRow> radius_curve(const Environment& env, const RadioConfig& radio,
                                         std::span<const double> loss_budgets_db,
                                         double h_lo_m, double h_hi_m, double step_m) {
    env.validate();
    radio.validate();
    if (!(h_lo_m > 0.0) || !(h_hi_m >= h_lo_m))
        throw DataError("radius_curve: altitude range must satisfy 0 < h_lo <= h_hi");
    if (!(step_m > 0.0))
        throw DataError("radius_curve: step must be positive");
    if (loss_budgets_db.empty())
        throw DataError("radius_curve: at least one loss budget required");

    std::vector<RadiusCurveRow> rows;
    for (double budget : loss_budgets_db) {
        if (!(budget > 0.0))
            throw DataError("radius_curve: loss budgets must be positive");
        for (double h = h_lo_m; h <= h_hi_m + 1e-9; h += step_m) {
            rows.push_back(
                {env.name, budget, h, coverage_radius_at(env, radio, h, budget), false});
        }
        const VerticalSolution vs = solve_vertical(env, radio, budget);
        rows.push_back({env.name, budget, vs.altitude_m, vs.radius_m, true});
    }
    return rows;
}

void write_radius_curve_csv(std::ostream& out, std::span<const RadiusCurveRow> rows) {
    out << "# coverage radius versus altitude (optimum = 1 marks the analytic maximum)\n";
    out << "env,loss_budget_db,altitude_m,radius_m,optimum\n";
    for (const RadiusCurveRow& r : rows) {
        out << r.env << "," << format_g6(r.loss_budget_db) << "," << format_g6(r.altitude_m)
            << "," << format_g6(r.radius_m) << "," << (r.optimum ? 1 : 0) << "\n";
    }
}

void write_placement_csv(std::ostream& out, const Placement3D& placement) {
    out << "center_x_m,center_y_m,altitude_m,radius_m,covered_count,"
        << "required_power_dbm,clamped\n";
    out << format_g6(placement.center.x) << "," << format_g6(placement.center.y) << ","
        << format_g6(placement.altitude_m) << "," << format_g6(placement.radius_m) << ","
        << placement.covered.size() << "," << format_g6(placement.required_power_dbm)
        << "," << (placement.altitude_clamped ? 1 : 0) << "\n";
}

void write_snapshot_csv(std::ostream& out, std::span<const Point2D> users,
                        const PlacementTrace& trace) {
    const Disk& c1 = trace.initial.disk;
    const Placement3D& fin = trace.result;
    out << "# initial_disk = center_x:" << format_g6(c1.center.x)
        << " center_y:" << format_g6(c1.center.y)
        << " radius_m:" << format_g6(c1.radius)
        << " altitude_m:" << format_g6(trace.vertical.altitude_m) << "\n";
    out << "# final_disk = center_x:" << format_g6(fin.center.x)
        << " center_y:" << format_g6(fin.center.y)
        << " radius_m:" << format_g6(fin.radius_m)
        << " altitude_m:" << format_g6(fin.altitude_m)
        << " required_power_dbm:" << format_g6(fin.required_power_dbm)
        << " clamped:" << (fin.altitude_clamped ? 1 : 0) << "\n";
    out << "x_m,y_m,in_initial_disk,in_final_disk\n";
    for (const Point2D& u : users) {
        const bool in1 = c1.contains(u, kCoverTol);
        const bool in2 = dist(fin.center, u) <= fin.radius_m + kCoverTol;
        out << format_g6(u.x) << "," << format_g6(u.y) << "," << (in1 ? 1 : 0) << ","
            << (in2 ? 1 : 0) << "\n";
    }
}

/* ---- CLI command bodies -------------------------------------------------- */

void cmd_angle(const AngleOptions& opt, std::ostream& out) {
    const Environment env = resolve_environment(opt.env_name, opt.custom);
    const double theta = optimal_elevation(env);
    out << "environment: " << env.name << "\n";
    out << "s_curve_a: " << format_g10(env.s_curve_a)
        << "  s_curve_b: " << format_g10(env.s_curve_b)
        << "  excess_los_db: " << format_g10(env.excess_los_db)
        << "  excess_nlos_db: " << format_g10(env.excess_nlos_db) << "\n";
    out << "theta_opt_rad: " << format_g10(theta) << "\n";
    out << "theta_opt_deg: " << format_g10(rad2deg(theta)) << "\n";
    out << "stationarity_residual: "
        << format_g10(elevation_optimality_residual(env, theta)) << "\n";
}

void cmd_radius_curve(const RadiusCurveOptions& opt, std::ostream& fallback_out) {
    std::vector<RadiusCurveRow> rows;
    for (const std::string& name : opt.env_names) {
        const Environment env = resolve_environment(name, opt.custom);
        const std::vector<RadiusCurveRow> part = radius_curve(
            env, opt.radio, opt.loss_budgets_db, opt.h_lo_m, opt.h_hi_m, opt.step_m);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    if (opt.output.empty()) {
        write_radius_curve_csv(fallback_out, rows);
    } else {
        std::ofstream out = open_output(opt.output);
        write_radius_curve_csv(out, rows);
    }
}

void cmd_place(const PlaceOptions& opt, std::ostream& fallback_out) {
    const Environment env = resolve_environment(opt.env_name, opt.custom);
    const std::vector<Point2D> users = read_users(opt.users_path);

    if (opt.baseline) {
        if (opt.snapshot_path)
            throw DataError("--snapshot requires the proposed placement, not --baseline");
        Rng rng(opt.seed);
        const Placement3D rec = random_baseline(users, env, opt.radio, opt.region, rng);
        if (opt.output.empty()) {
            write_placement_csv(fallback_out, rec);
        } else {
            std::ofstream out = open_output(opt.output);
            write_placement_csv(out, rec);
        }
        return;
    }

    const PlacementTrace trace = place_3d_traced(users, env, opt.radio);
    if (opt.output.empty()) {
        write_placement_csv(fallback_out, trace.result);
    } else {
        std::ofstream out = open_output(opt.output);
        write_placement_csv(out, trace.result);
    }
    if (opt.snapshot_path) {
        std::ofstream snap = open_output(*opt.snapshot_path);
        write_snapshot_csv(snap, users, trace);
    }
}

void cmd_sweep_cov(const Scenario& scenario, std::ostream& fallback_out,
                   std::ostream* progress) {
    const std::vector<SweepRecord> records = run_sweep(scenario, progress);
    if (scenario.output.empty()) {
        write_sweep_csv(fallback_out, scenario, records);
    } else {
        std::ofstream out = open_output(scenario.output);
        write_sweep_csv(out, scenario, records);
    }
}

void cmd_gen_users(const GenUsersOptions& opt, std::ostream& fallback_out) {
    opt.region.validate();
    opt.process.validate();

    ThomasParams params = opt.process;
    if (opt.target_cov) {
        Rng calib_rng(mix64(opt.seed) ^ mix64(0xca11b001ULL));
        params.sigma_m =
            calibrate_sigma(opt.region, opt.process, *opt.target_cov, calib_rng);
    }

    Rng rng(opt.seed);
    const std::vector<Point2D> users = sample_thomas(opt.region, params, rng);

    std::vector<std::string> header;
    header.push_back("generated by: uavbs gen-users");
    header.push_back("seed = " + std::to_string(opt.seed));
    header.push_back("sigma_m = " + format_g6(params.sigma_m));
    header.push_back("mean_offspring = " + format_g6(params.mean_offspring));
    if (params.total_intensity_per_km2)
        header.push_back("total_intensity_per_km2 = " +
                         format_g6(*params.total_intensity_per_km2));
    header.push_back("count = " + std::to_string(users.size()));
    if (users.size() >= 3) {
        try {
            header.push_back("measured_cov = " +
                             format_g6(voronoi_cov(users, opt.region)));
        } catch (const DataError&) {
            /* degenerate draw: no CoV annotation */
        }
    }

    if (opt.output.empty()) {
        for (const std::string& h : header) fallback_out << "# " << h << "\n";
        char buf[80];
        for (const Point2D& p : users) {
            std::snprintf(buf, sizeof buf, "%.9g %.9g\n", p.x, p.y);
            fallback_out << buf;
        }
    } else {
        write_users(opt.output, users, header);
    }
}

}  // namespace uavbs
