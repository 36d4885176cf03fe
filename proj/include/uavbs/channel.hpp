#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "uavbs/errors.hpp"

namespace uavbs {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

/* Air-to-ground propagation constants for one environment class.  The
 * line-of-sight probability follows a sigmoid in the elevation angle with
 * shape parameters (s_curve_a, s_curve_b); excess_los_db / excess_nlos_db
 * are the mean excess losses (dB) added to free space on LoS and NLoS
 * links respectively. */
struct Environment {
    std::string name;
    double s_curve_a = 0.0;      // sigmoid offset (dimensionless)
    double s_curve_b = 0.0;      // sigmoid slope (per degree)
    double excess_los_db = 0.0;
    double excess_nlos_db = 0.0;

    /* A = eta_LoS - eta_NLoS; negative, since LoS links lose less. */
    double excess_delta_db() const { return excess_los_db - excess_nlos_db; }

    void validate() const;
};

/* Radio link budget: carrier frequency, transmit power ceiling and
 * receiver sensitivity (both dBm), and the regulatory minimum altitude. */
struct RadioConfig {
    double carrier_hz = 2.0e9;
    double tx_power_dbm = 30.0;
    double rx_sensitivity_dbm = -70.0;
    double min_altitude_m = 100.0;

    /* Maximum tolerable path loss at full transmit power. */
    double loss_budget_db() const { return tx_power_dbm - rx_sensitivity_dbm; }

    void validate() const;
};

/* Built-in environment presets: suburban, urban, dense-urban, highrise-urban. */
const std::vector<Environment>& environment_presets();

/* Look a preset up by name; throws DataError for unknown names. */
const Environment& environment_preset(std::string_view name);

/* LoS probability as a function of the elevation angle (radians) alone. */
double los_probability_at_elevation(const Environment& env, double elevation_rad);

/* LoS probability seen from altitude h toward a ground point at horizontal
 * range r (both metres).  Undefined at h = r = 0 (throws NumericError). */
double los_probability(const Environment& env, double altitude_m, double ground_range_m);

/* Mean NLoS path loss at 1 m slant distance: the distance-independent part
 * of the model, 20*log10(4*pi*f/c) + eta_NLoS. */
double nlos_reference_loss_db(const Environment& env, const RadioConfig& radio);

/* Mean path loss (dB) of the air-to-ground link from altitude h to ground
 * range r: LoS-probability-weighted excess loss plus free-space spreading
 * over the slant distance.  Throws NumericError at zero slant distance. */
double path_loss_db(const Environment& env, const RadioConfig& radio,
                    double altitude_m, double ground_range_m);

/* Received power (dBm) at the given mean path loss. */
double received_power_dbm(const RadioConfig& radio, double loss_db);

/* A ground point is covered when the mean path loss stays within budget. */
bool is_covered(const RadioConfig& radio, double loss_db);

/* Largest ground range (metres) still covered from altitude h under the
 * given loss budget; 0 when even the nadir point is out of budget.  Found
 * by doubling bracket + bisection on the monotone loss-vs-range profile;
 * the bracket is tightened to 1e-6 m. */
double coverage_radius_at(const Environment& env, const RadioConfig& radio,
                          double altitude_m, double loss_budget_db);

}  // namespace uavbs
