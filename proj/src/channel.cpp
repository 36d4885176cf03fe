#include "uavbs/channel.hpp"

#include <cmath>

namespace uavbs {

void Environment::validate() const {
    if (!(s_curve_a > 0.0) || !std::isfinite(s_curve_a))
        throw DataError("environment '" + name + "': s_curve_a must be positive");
    if (!(s_curve_b > 0.0) || !std::isfinite(s_curve_b))
        throw DataError("environment '" + name + "': s_curve_b must be positive");
    if (!(excess_los_db >= 0.0) || !std::isfinite(excess_los_db))
        throw DataError("environment '" + name + "': excess_los_db must be non-negative");
    if (!(excess_nlos_db > excess_los_db) || !std::isfinite(excess_nlos_db))
        throw DataError("environment '" + name +
                        "': excess_nlos_db must exceed excess_los_db");
}

void RadioConfig::validate() const {
    if (!(carrier_hz > 0.0) || !std::isfinite(carrier_hz))
        throw DataError("radio: carrier_hz must be positive");
    if (!std::isfinite(tx_power_dbm) || !std::isfinite(rx_sensitivity_dbm))
        throw DataError("radio: power levels must be finite");
    if (!(tx_power_dbm > rx_sensitivity_dbm))
        throw DataError("radio: tx_power_dbm must exceed rx_sensitivity_dbm");
    if (!(min_altitude_m >= 0.0) || !std::isfinite(min_altitude_m))
        throw DataError("radio: min_altitude_m must be non-negative");
}

const std::vector<Environment>& environment_presets() {
    static const std::vector<Environment> presets = {
        {"suburban", 4.88, 0.43, 0.1, 21.0},
        {"urban", 9.61, 0.16, 1.0, 20.0},
        {"dense-urban", 12.08, 0.11, 1.6, 23.0},
        {"highrise-urban", 27.23, 0.08, 2.3, 34.0},
    };
    return presets;
}

const Environment& environment_preset(std::string_view name) {
    for (const Environment& env : environment_presets()) {
        if (env.name == name) return env;
    }
    std::string known;
    for (const Environment& env : environment_presets()) {
        if (!known.empty()) known += ", ";
        known += env.name;
    }
    throw DataError("unknown environment '" + std::string(name) + "' (known: " + known + ")");
}

double los_probability_at_elevation(const Environment& env, double elevation_rad) {
    const double theta_deg = rad2deg(elevation_rad);
    return 1.0 / (1.0 + env.s_curve_a *
                            std::exp(-env.s_curve_b * (theta_deg - env.s_curve_a)));
}

double los_probability(const Environment& env, double altitude_m, double ground_range_m) {
    if (altitude_m < 0.0 || ground_range_m < 0.0)
        throw NumericError("los_probability: altitude and range must be non-negative");
    if (altitude_m == 0.0 && ground_range_m == 0.0)
        throw NumericError("los_probability: elevation angle undefined at zero slant distance");
    return los_probability_at_elevation(env, std::atan2(altitude_m, ground_range_m));
}

double nlos_reference_loss_db(const Environment& env, const RadioConfig& radio) {
    return 20.0 * std::log10(4.0 * kPi * radio.carrier_hz / kSpeedOfLight) +
           env.excess_nlos_db;
}

double path_loss_db(const Environment& env, const RadioConfig& radio,
                    double altitude_m, double ground_range_m) {
    const double d = std::hypot(altitude_m, ground_range_m);
    if (d <= 0.0)
        throw NumericError("path_loss_db: slant distance must be positive");
    return env.excess_delta_db() * los_probability(env, altitude_m, ground_range_m) +
           20.0 * std::log10(d) + nlos_reference_loss_db(env, radio);
}

double received_power_dbm(const RadioConfig& radio, double loss_db) {
    return radio.tx_power_dbm - loss_db;
}

bool is_covered(const RadioConfig& radio, double loss_db) {
    return loss_db <= radio.loss_budget_db();
}

double coverage_radius_at(const Environment& env, const RadioConfig& radio,
                          double altitude_m, double loss_budget_db) {
    if (!(altitude_m > 0.0))
        throw NumericError("coverage_radius_at: altitude must be positive");
    if (!(loss_budget_db > 0.0))
        throw NumericError("coverage_radius_at: loss budget must be positive");

    if (path_loss_db(env, radio, altitude_m, 0.0) > loss_budget_db) return 0.0;

    /* Loss grows without bound in range, so double until the budget is
     * exceeded, then bisect.  lo stays within budget, hi beyond it. */
    double lo = 0.0;
    double hi = 1.0;
    while (path_loss_db(env, radio, altitude_m, hi) <= loss_budget_db) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1.0e12)
            throw NumericError("coverage_radius_at: loss never exceeds budget");
    }
    for (int i = 0; i < 200 && (hi - lo) > 1.0e-6; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (path_loss_db(env, radio, altitude_m, mid) <= loss_budget_db) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace uavbs
