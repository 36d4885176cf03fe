#pragma once

#include <span>
#include <vector>

#include "uavbs/altitude.hpp"
#include "uavbs/geometry.hpp"
#include "uavbs/rng.hpp"

namespace uavbs {

/* Users on or within 1e-9 m of a disk boundary count as covered; keeps
 * construction-by-tangency candidates stable against rounding. */
inline constexpr double kCoverTol = 1.0e-9;

/* A fixed-radius disk placement together with the users it covers
 * (sorted indices into the caller's user list). */
struct CoverResult {
    Disk disk;
    std::vector<int> covered;
};

/* Final 3D placement: horizontal center, altitude, enclosing radius of the
 * covered users, their indices, and the transmit power (dBm) required to
 * reach the cell edge. */
struct Placement3D {
    Point2D center;
    double altitude_m = 0.0;
    double radius_m = 0.0;
    std::vector<int> covered;
    double required_power_dbm = 0.0;
    bool altitude_clamped = false;  // the minimum-altitude floor was binding
};

/* Disk of the given radius covering the most users, by exact candidate
 * enumeration: an optimal disk can always be translated until it is pinned
 * by one user (centered on it) or two users on its boundary, so the user
 * points plus all pairwise circle intersections form a complete candidate
 * set (O(n^3) overall).  Ties break deterministically by (more covered,
 * smaller enclosing radius of the covered set, lexicographically smaller
 * center).  Throws DataError on an empty user list or non-positive radius. */
CoverResult max_cover_disk(std::span<const Point2D> users, double radius_m);

/* Smallest circle enclosing all points: randomized incremental method with
 * a deterministic, input-derived shuffle, so equal inputs give equal
 * outputs.  The radius is inflated to the farthest point distance so
 * containment holds exactly.  Throws DataError on empty input. */
Disk smallest_enclosing_circle(std::span<const Point2D> points);

/* Intermediate outputs of place_3d, for reporting and plots. */
struct PlacementTrace {
    VerticalSolution vertical;  // budget-limited disk: radius and altitude
    CoverResult initial;        // max-cover disk at the budget-limited radius
    Placement3D result;
};

/* Energy-efficient 3D placement: size the widest budget-feasible disk,
 * place it over the most users, shrink it to the smallest circle still
 * enclosing them, then descend to the loss-optimal altitude for the shrunk
 * radius (clamped to the regulatory floor) and emit the power actually
 * needed.  Unless the altitude floor binds, required power never exceeds
 * the configured ceiling.  Throws DataError on an empty user list. */
PlacementTrace place_3d_traced(std::span<const Point2D> users, const Environment& env,
                               const RadioConfig& radio);
Placement3D place_3d(std::span<const Point2D> users, const Environment& env,
                     const RadioConfig& radio);

/* Non-adaptive reference: a uniformly random center in the region at the
 * budget-limited radius and altitude, transmitting at full power. */
Placement3D random_baseline(std::span<const Point2D> users, const Environment& env,
                            const RadioConfig& radio, const Region& region, Rng& rng);

}  // namespace uavbs
