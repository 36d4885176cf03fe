#pragma once

#include <optional>
#include <span>
#include <vector>

#include "uavbs/geometry.hpp"
#include "uavbs/rng.hpp"

namespace uavbs {

/* Empirical normalization constant that maps the Voronoi-area coefficient
 * of variation of a homogeneous Poisson process to 1. */
inline constexpr double kCovNormalization = 0.529;

/* Thomas cluster process: Poisson parents, each with a Poisson number of
 * offspring displaced by an isotropic Gaussian of scale sigma_m.  When
 * total_intensity_per_km2 is set it pins the expected point density and
 * the parent intensity is derived from it; otherwise parent_intensity_per_km2
 * is used directly and the total intensity is parent * mean_offspring. */
struct ThomasParams {
    double parent_intensity_per_km2 = 0.0;
    double mean_offspring = 55.0;
    double sigma_m = 150.0;
    std::optional<double> total_intensity_per_km2;

    double effective_parent_intensity_per_km2() const {
        return total_intensity_per_km2 ? *total_intensity_per_km2 / mean_offspring
                                       : parent_intensity_per_km2;
    }

    void validate() const;
};

/* One draw of the Thomas process restricted to the region.  Parents are
 * generated over the region expanded by 3*sigma on every side so clusters
 * seeded just outside still contribute (edge correction); offspring
 * falling outside the region are discarded.  Deterministic per rng state. */
std::vector<Point2D> sample_thomas(const Region& region, const ThomasParams& params,
                                   Rng& rng);

/* Area of each point's Voronoi cell clipped to the region, in input order.
 * Cells are built by intersecting the region rectangle with the bisector
 * half-planes toward every other point.  Requires >= 3 points, all inside
 * the region, not all collinear, no duplicates (throws DataError). */
std::vector<double> voronoi_cell_areas(std::span<const Point2D> points,
                                       const Region& region);

/* Spatial heterogeneity measure: coefficient of variation of the clipped
 * Voronoi cell areas (population standard deviation over mean), scaled by
 * 1/0.529 so a homogeneous Poisson pattern measures ~1. */
double voronoi_cov(std::span<const Point2D> points, const Region& region);

struct CalibrationOptions {
    double sigma_floor_m = 25.0;   // below this the CoV-vs-sigma curve plateaus
    double tolerance = 0.15;       // acceptable |mean CoV - target|
    int replications = 96;         // Monte Carlo draws per sigma evaluation
    int max_iterations = 48;       // bisection steps in log-sigma
};

/* Find sigma such that the Monte Carlo mean CoV of the process matches
 * target_cov within tolerance.  Mean CoV decreases in sigma, so this is a
 * bisection in log-sigma between sigma_floor_m and max(region extent),
 * with common random numbers across evaluations for a smooth objective.
 * Throws NumericError when the target is outside the achievable range or
 * the search fails to converge. */
double calibrate_sigma(const Region& region, const ThomasParams& params,
                       double target_cov, Rng& rng,
                       const CalibrationOptions& options = {});

}  // namespace uavbs
