#pragma once

#include "uavbs/channel.hpp"

namespace uavbs {

/* Result of the vertical sizing step: the loss-optimal elevation angle and
 * the widest coverage disk the loss budget allows, with its altitude. */
struct VerticalSolution {
    double elevation_rad = 0.0;   // loss-optimal elevation angle
    double radius_m = 0.0;        // maximum coverage radius at that angle
    double altitude_m = 0.0;      // radius_m * tan(elevation)
    double loss_budget_db = 0.0;  // budget the solution was sized for
};

/* Stationarity function of the cell-edge path loss with respect to the
 * elevation angle at fixed ground radius; its root is the loss-minimising
 * elevation.  Exposed so callers can report the residual at a solution. */
double elevation_optimality_residual(const Environment& env, double elevation_rad);

/* Loss-optimal elevation angle (radians).  Roots of the stationarity
 * function on (0.001, pi/2 - 0.001) are located by a 0.5-degree bracketing
 * scan followed by bisection; when several stationary points exist (steep
 * sigmoids have a spurious low-angle pair) the one with the largest
 * coverage radius wins.  Depends on the environment only.  Throws
 * NumericError when no sign change exists (invalid environment constants). */
double optimal_elevation(const Environment& env);

/* Largest coverage radius achievable within the loss budget, attained at
 * the optimal elevation angle; closed form once the angle is known.
 * Throws NumericError when the budget is too small for a 1 m cell. */
double max_coverage_radius(const Environment& env, const RadioConfig& radio,
                           double loss_budget_db);

/* Altitude that realises the given coverage radius at the given elevation
 * angle: h = r * tan(theta). */
double altitude_for_radius(double radius_m, double elevation_rad);

/* Bundle of the above for one environment and budget. */
VerticalSolution solve_vertical(const Environment& env, const RadioConfig& radio,
                                double loss_budget_db);

}  // namespace uavbs
