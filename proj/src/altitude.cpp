#include "uavbs/altitude.hpp"

#include <cmath>

namespace uavbs {

double elevation_optimality_residual(const Environment& env, double elevation_rad) {
    const double a = env.s_curve_a;
    const double b = env.s_curve_b;
    const double A = env.excess_delta_db();
    const double E = std::exp(-b * (rad2deg(elevation_rad) - a));
    const double aE = a * E;
    return kPi / (9.0 * std::log(10.0)) * std::tan(elevation_rad) +
           a * b * A * E / ((aE + 1.0) * (aE + 1.0));
}

namespace {

/* Refine one sign-change bracket of the stationarity function to ~1e-13 rad
 * (~60 halvings of the 0.0087 rad scan step; 120 is pure headroom). */
double bisect_stationary(const Environment& env, double lo, double f_lo, double hi) {
    for (int i = 0; i < 120 && (hi - lo) > 1.0e-13; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = elevation_optimality_residual(env, mid);
        if (f_lo * f_mid <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    return 0.5 * (lo + hi);
}

/* Budget-independent part of the coverage radius along the loss boundary:
 * cos(theta) * 10^(-A * P_LoS(theta) / 20).  The full radius is this times
 * a positive budget factor, so ranking stationary points by it ranks them
 * by radius for every loss budget at once. */
double radius_factor(const Environment& env, double elevation_rad) {
    const double p_los = los_probability_at_elevation(env, elevation_rad);
    return std::cos(elevation_rad) *
           std::pow(10.0, -env.excess_delta_db() * p_los / 20.0);
}

}  // namespace

double optimal_elevation(const Environment& env) {
    env.validate();

    constexpr double kEdge = 1.0e-3;            // stay off the tan singularity
    const double step = deg2rad(0.5);           // bracketing scan resolution
    const double hi_limit = kPi / 2.0 - kEdge;

    /* The stationarity function can cross zero more than once (steep
     * sigmoids produce a spurious low-angle stationary pair), so refine
     * every bracket the scan finds and keep the root that maximizes the
     * coverage radius. */
    double best = -1.0;
    double best_factor = 0.0;
    double lo = kEdge;
    double f_lo = elevation_optimality_residual(env, lo);
    while (lo < hi_limit) {
        const double hi = std::min(lo + step, hi_limit);
        const double f_hi = elevation_optimality_residual(env, hi);
        if (f_lo * f_hi <= 0.0) {
            const double root = bisect_stationary(env, lo, f_lo, hi);
            const double factor = radius_factor(env, root);
            if (factor > best_factor) {
                best = root;
                best_factor = factor;
            }
        }
        lo = hi;
        f_lo = f_hi;
    }
    if (best < 0.0)
        throw NumericError("optimal_elevation: no sign change for environment '" +
                           env.name + "'; constants do not describe a valid sigmoid");
    return best;
}

double max_coverage_radius(const Environment& env, const RadioConfig& radio,
                           double loss_budget_db) {
    radio.validate();
    const double theta = optimal_elevation(env);
    const double p_los = los_probability_at_elevation(env, theta);
    const double exponent = (loss_budget_db - env.excess_delta_db() * p_los -
                             nlos_reference_loss_db(env, radio)) / 20.0;
    const double radius = std::cos(theta) * std::pow(10.0, exponent);
    if (radius < 1.0)
        throw NumericError("max_coverage_radius: loss budget of " +
                           std::to_string(loss_budget_db) +
                           " dB is too small for a usable cell");
    return radius;
}

double altitude_for_radius(double radius_m, double elevation_rad) {
    if (radius_m < 0.0)
        throw NumericError("altitude_for_radius: radius must be non-negative");
    return radius_m * std::tan(elevation_rad);
}

VerticalSolution solve_vertical(const Environment& env, const RadioConfig& radio,
                                double loss_budget_db) {
    VerticalSolution out;
    out.elevation_rad = optimal_elevation(env);
    out.radius_m = max_coverage_radius(env, radio, loss_budget_db);
    out.altitude_m = altitude_for_radius(out.radius_m, out.elevation_rad);
    out.loss_budget_db = loss_budget_db;
    return out;
}

}  // namespace uavbs
