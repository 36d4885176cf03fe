#include "uavbs/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace uavbs {

void ThomasParams::validate() const {
    if (!(mean_offspring > 0.0) || !std::isfinite(mean_offspring))
        throw DataError("thomas: mean_offspring must be positive");
    if (!(sigma_m > 0.0) || !std::isfinite(sigma_m))
        throw DataError("thomas: sigma_m must be positive");
    if (total_intensity_per_km2) {
        if (!(*total_intensity_per_km2 > 0.0) || !std::isfinite(*total_intensity_per_km2))
            throw DataError("thomas: total_intensity_per_km2 must be positive");
    } else if (!(parent_intensity_per_km2 > 0.0) ||
               !std::isfinite(parent_intensity_per_km2)) {
        throw DataError("thomas: parent_intensity_per_km2 must be positive "
                        "(or set total_intensity_per_km2)");
    }
}

std::vector<Point2D> sample_thomas(const Region& region, const ThomasParams& params,
                                   Rng& rng) {
    region.validate();
    params.validate();

    /* Parents live on the region grown by 3*sigma so clusters centered just
     * outside still drop offspring inside; beyond 3*sigma the Gaussian mass
     * reaching the region is negligible. */
    const double pad = 3.0 * params.sigma_m;
    const double lam_parent_m2 = params.effective_parent_intensity_per_km2() / 1.0e6;
    const double mean_parents =
        lam_parent_m2 * (region.width() + 2.0 * pad) * (region.height() + 2.0 * pad);

    std::vector<Point2D> out;
    const int n_parents = rng.poisson(mean_parents);
    for (int p = 0; p < n_parents; ++p) {
        const double px = rng.uniform(region.x_min - pad, region.x_max + pad);
        const double py = rng.uniform(region.y_min - pad, region.y_max + pad);
        const int kids = rng.poisson(params.mean_offspring);
        for (int k = 0; k < kids; ++k) {
            const Point2D child{px + params.sigma_m * rng.normal(),
                                py + params.sigma_m * rng.normal()};
            if (region.contains(child)) out.push_back(child);
        }
    }
    return out;
}

namespace {

/* Keep the side of the bisector closer to the cell's seed: f(x) <= 0 with
 * f(x) = (x - mid) . dir, dir pointing from the seed to its neighbor. */
void clip_halfplane(std::vector<Point2D>& poly, std::vector<Point2D>& scratch,
                    const Point2D& mid, double dir_x, double dir_y) {
    scratch.clear();
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Point2D& v1 = poly[k];
        const Point2D& v2 = poly[(k + 1) % n];
        const double f1 = (v1.x - mid.x) * dir_x + (v1.y - mid.y) * dir_y;
        const double f2 = (v2.x - mid.x) * dir_x + (v2.y - mid.y) * dir_y;
        const bool in1 = f1 <= 0.0;
        const bool in2 = f2 <= 0.0;
        if (in1) scratch.push_back(v1);
        if (in1 != in2) {
            const double t = f1 / (f1 - f2);
            scratch.push_back({v1.x + t * (v2.x - v1.x), v1.y + t * (v2.y - v1.y)});
        }
    }
    poly.swap(scratch);
}

double polygon_area(const std::vector<Point2D>& poly) {
    double twice = 0.0;
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const Point2D& a = poly[k];
        const Point2D& b = poly[(k + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return std::abs(twice) / 2.0;
}

}  // namespace

std::vector<double> voronoi_cell_areas(std::span<const Point2D> points,
                                       const Region& region) {
    region.validate();
    const std::size_t n = points.size();
    if (n < 3)
        throw DataError("voronoi_cell_areas: need at least 3 points, got " +
                        std::to_string(n));
    for (const Point2D& p : points) {
        if (!region.contains(p))
            throw DataError("voronoi_cell_areas: point outside the region");
    }

    /* Duplicates make a cell empty; reject them. */
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a].x < points[b].x ||
               (points[a].x == points[b].x && points[a].y < points[b].y);
    });
    for (std::size_t k = 1; k < n; ++k) {
        const Point2D& a = points[order[k - 1]];
        const Point2D& b = points[order[k]];
        if (a.x == b.x && a.y == b.y)
            throw DataError("voronoi_cell_areas: duplicate points");
    }

    /* All-collinear input is degenerate for a planar tessellation. */
    std::size_t far_idx = 0;
    double far_d2 = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        const double d2 = dist2(points[0], points[k]);
        if (d2 > far_d2) {
            far_d2 = d2;
            far_idx = k;
        }
    }
    const double ex = points[far_idx].x - points[0].x;
    const double ey = points[far_idx].y - points[0].y;
    bool collinear = true;
    for (std::size_t k = 0; k < n && collinear; ++k) {
        const double c = ex * (points[k].y - points[0].y) - ey * (points[k].x - points[0].x);
        if (std::abs(c) > 1.0e-12 * far_d2) collinear = false;
    }
    if (collinear)
        throw DataError("voronoi_cell_areas: points are collinear");

    std::vector<double> areas(n, 0.0);
    std::vector<std::size_t> by_dist(n);
    std::vector<Point2D> poly, scratch;
    for (std::size_t i = 0; i < n; ++i) {
        poly = {{region.x_min, region.y_min},
                {region.x_max, region.y_min},
                {region.x_max, region.y_max},
                {region.x_min, region.y_max}};

        std::iota(by_dist.begin(), by_dist.end(), 0);
        std::sort(by_dist.begin(), by_dist.end(), [&](std::size_t a, std::size_t b) {
            return dist2(points[i], points[a]) < dist2(points[i], points[b]);
        });

        for (std::size_t j : by_dist) {
            if (j == i) continue;
            const double d2 = dist2(points[i], points[j]);
            /* A bisector at distance d/2 only cuts the cell while some
             * vertex lies farther than d/2 from the seed; neighbors are
             * visited nearest-first, so stop at the first that cannot cut. */
            double max_v2 = 0.0;
            for (const Point2D& v : poly) max_v2 = std::max(max_v2, dist2(points[i], v));
            if (4.0 * max_v2 <= d2) break;

            const Point2D mid{(points[i].x + points[j].x) / 2.0,
                              (points[i].y + points[j].y) / 2.0};
            clip_halfplane(poly, scratch, mid, points[j].x - points[i].x,
                           points[j].y - points[i].y);
        }
        areas[i] = polygon_area(poly);
    }
    return areas;
}

double voronoi_cov(std::span<const Point2D> points, const Region& region) {
    const std::vector<double> areas = voronoi_cell_areas(points, region);
    const double mean =
        std::accumulate(areas.begin(), areas.end(), 0.0) / static_cast<double>(areas.size());
    if (!(mean > 0.0))
        throw NumericError("voronoi_cov: degenerate tessellation (zero mean cell area)");
    double var = 0.0;
    for (double a : areas) var += (a - mean) * (a - mean);
    var /= static_cast<double>(areas.size());
    return std::sqrt(var) / mean / kCovNormalization;
}

double calibrate_sigma(const Region& region, const ThomasParams& params,
                       double target_cov, Rng& rng, const CalibrationOptions& options) {
    region.validate();
    params.validate();
    if (!(target_cov >= 1.0) || !std::isfinite(target_cov))
        throw DataError("calibrate_sigma: target_cov must be >= 1");
    const double sigma_cap = std::max(region.width(), region.height());
    if (!(options.sigma_floor_m > 0.0) || options.sigma_floor_m >= sigma_cap)
        throw DataError("calibrate_sigma: sigma_floor_m must lie in (0, region extent)");
    if (options.replications < 1)
        throw DataError("calibrate_sigma: replications must be positive");

    /* Common random numbers: the same seed block drives every sigma
     * evaluation, so the Monte Carlo mean is a smooth, effectively
     * deterministic function of sigma and bisection is well posed. */
    const std::uint64_t base = rng.next_u64();
    auto mean_cov_at = [&](double sigma) {
        ThomasParams p = params;
        p.sigma_m = sigma;
        double sum = 0.0;
        int evaluable = 0;
        for (int i = 0; i < options.replications; ++i) {
            Rng draw_rng(mix64(base + static_cast<std::uint64_t>(i)));
            const std::vector<Point2D> pts = sample_thomas(region, p, draw_rng);
            if (pts.size() < 3) continue;
            try {
                sum += voronoi_cov(pts, region);
                ++evaluable;
            } catch (const DataError&) {
                /* collinear or duplicate draw: not measurable, skip */
            }
        }
        if (evaluable == 0)
            throw NumericError("calibrate_sigma: no draw produced a measurable pattern; "
                               "process intensity too low");
        return sum / evaluable;
    };

    const double cov_at_floor = mean_cov_at(options.sigma_floor_m);
    if (target_cov > cov_at_floor) {
        if (target_cov - cov_at_floor <= options.tolerance) return options.sigma_floor_m;
        throw NumericError("calibrate_sigma: target CoV " + std::to_string(target_cov) +
                           " above the achievable maximum ~" + std::to_string(cov_at_floor) +
                           " for these cluster parameters");
    }
    const double cov_at_cap = mean_cov_at(sigma_cap);
    if (target_cov <= cov_at_cap) {
        if (cov_at_cap - target_cov <= options.tolerance) return sigma_cap;
        throw NumericError("calibrate_sigma: target CoV " + std::to_string(target_cov) +
                           " below the achievable minimum ~" + std::to_string(cov_at_cap));
    }

    /* Mean CoV falls monotonically in sigma; bisect in log-sigma. */
    double lo = options.sigma_floor_m;  // CoV here >= target
    double hi = sigma_cap;              // CoV here < target
    for (int it = 0; it < options.max_iterations; ++it) {
        const double mid = std::sqrt(lo * hi);
        const double c = mean_cov_at(mid);
        if (std::abs(c - target_cov) <= options.tolerance) return mid;
        if (c > target_cov) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw NumericError("calibrate_sigma: bisection failed to reach target CoV " +
                       std::to_string(target_cov) + " within tolerance");
}

}  // namespace uavbs
