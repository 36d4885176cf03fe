#include "uavbs/placement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

namespace uavbs {

namespace {

/* ---- smallest enclosing circle internals ------------------------------- */

/* Containment with a small multiplicative slack; the incremental method
 * only needs it to absorb rounding while candidate circles are grown. */
bool sec_contains(const Disk& d, const Point2D& p) {
    return dist(d.center, p) <= d.radius * (1.0 + 1.0e-14);
}

Disk make_diameter(const Point2D& a, const Point2D& b) {
    const Point2D c{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    return {c, std::max(dist(c, a), dist(c, b))};
}

double cross(const Point2D& o, const Point2D& a, const Point2D& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/* Circumcircle of three points, or radius < 0 when they are collinear.
 * Coordinates are taken relative to the bounding-box midpoint first to
 * keep the determinant well conditioned. */
Disk make_circumcircle(const Point2D& a, const Point2D& b, const Point2D& c) {
    const double ox = (std::min({a.x, b.x, c.x}) + std::max({a.x, b.x, c.x})) / 2.0;
    const double oy = (std::min({a.y, b.y, c.y}) + std::max({a.y, b.y, c.y})) / 2.0;
    const double ax = a.x - ox, ay = a.y - oy;
    const double bx = b.x - ox, by = b.y - oy;
    const double cx = c.x - ox, cy = c.y - oy;
    const double d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0;
    if (d == 0.0) return {{0.0, 0.0}, -1.0};
    const double x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                           (cx * cx + cy * cy) * (ay - by)) / d;
    const double y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                           (cx * cx + cy * cy) * (bx - ax)) / d;
    const Point2D center{x, y};
    return {center, std::max({dist(center, a), dist(center, b), dist(center, c)})};
}

/* Smallest circle through p and q enclosing points[0..n). */
Disk sec_two_points(std::span<const Point2D> pts, std::size_t n, const Point2D& p,
                    const Point2D& q) {
    const Disk circ = make_diameter(p, q);
    Disk left{{0.0, 0.0}, -1.0};
    Disk right{{0.0, 0.0}, -1.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Point2D& r = pts[i];
        if (sec_contains(circ, r)) continue;
        const double side = cross(p, q, r);
        const Disk c = make_circumcircle(p, q, r);
        if (c.radius < 0.0) continue;
        const double center_side = cross(p, q, c.center);
        if (side > 0.0 && (left.radius < 0.0 || center_side > cross(p, q, left.center))) {
            left = c;
        } else if (side < 0.0 &&
                   (right.radius < 0.0 || center_side < cross(p, q, right.center))) {
            right = c;
        }
    }
    if (left.radius < 0.0 && right.radius < 0.0) return circ;
    if (left.radius < 0.0) return right;
    if (right.radius < 0.0) return left;
    return left.radius <= right.radius ? left : right;
}

/* Smallest circle through p enclosing points[0..n). */
Disk sec_one_point(std::span<const Point2D> pts, std::size_t n, const Point2D& p) {
    Disk c{p, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        if (sec_contains(c, pts[i])) continue;
        if (c.radius == 0.0) {
            c = make_diameter(p, pts[i]);
        } else {
            c = sec_two_points(pts, i + 1, p, pts[i]);
        }
    }
    return c;
}

/* Shuffle seed derived from the input bytes, so the randomized method is a
 * pure function of its input. */
std::uint64_t hash_points(std::span<const Point2D> pts) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (const Point2D& p : pts) {
        std::uint64_t bits;
        std::memcpy(&bits, &p.x, sizeof bits);
        h = (h ^ bits) * 0x100000001b3ULL;
        std::memcpy(&bits, &p.y, sizeof bits);
        h = (h ^ bits) * 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Disk smallest_enclosing_circle(std::span<const Point2D> points) {
    if (points.empty())
        throw DataError("smallest_enclosing_circle: point set is empty");

    std::vector<Point2D> pts(points.begin(), points.end());
    Rng rng(mix64(hash_points(points)));
    rng.shuffle(pts);

    Disk c{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (!sec_contains(c, pts[i])) c = sec_one_point(pts, i + 1, pts[i]);
    }

    /* Inflate to the true farthest distance so containment holds with zero
     * tolerance and the radius is independent of the visit order. */
    double r = 0.0;
    for (const Point2D& p : points) r = std::max(r, dist(c.center, p));
    c.radius = r;
    return c;
}

CoverResult max_cover_disk(std::span<const Point2D> users, double radius_m) {
    if (users.empty())
        throw DataError("max_cover_disk: user list is empty");
    if (!(radius_m > 0.0))
        throw DataError("max_cover_disk: radius must be positive");

    const std::size_t n = users.size();
    const double reach = radius_m + kCoverTol;
    const double reach2 = reach * reach;

    /* Candidate centers: a maximal disk can be translated until it is
     * pinned by a user at its center or by two users on its boundary, so
     * user points plus pairwise intersections of radius-r circles form a
     * complete set. */
    std::vector<Point2D> candidates;
    candidates.reserve(n * n);
    for (const Point2D& u : users) candidates.push_back(u);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = dist(users[i], users[j]);
            if (d == 0.0 || d > 2.0 * radius_m) continue;
            const Point2D mid{(users[i].x + users[j].x) / 2.0,
                              (users[i].y + users[j].y) / 2.0};
            const double half = d / 2.0;
            const double off = std::sqrt(std::max(radius_m * radius_m - half * half, 0.0));
            const double ux = (users[j].x - users[i].x) / d;
            const double uy = (users[j].y - users[i].y) / d;
            candidates.push_back({mid.x - off * uy, mid.y + off * ux});
            candidates.push_back({mid.x + off * uy, mid.y - off * ux});
        }
    }

    auto count_covered = [&](const Point2D& c) {
        int count = 0;
        for (const Point2D& u : users) {
            if (dist2(c, u) <= reach2) ++count;
        }
        return count;
    };

    int best_count = 0;
    for (const Point2D& c : candidates) best_count = std::max(best_count, count_covered(c));

    /* Among maximal candidates prefer the one whose covered users pack
     * tightest (smallest enclosing radius), then the lexicographically
     * smallest center; makes the result order- and duplicate-insensitive. */
    bool have_best = false;
    Point2D best_center;
    double best_sec_radius = std::numeric_limits<double>::infinity();
    std::vector<int> best_covered;
    std::vector<Point2D> scratch;
    for (const Point2D& c : candidates) {
        if (count_covered(c) != best_count) continue;
        scratch.clear();
        std::vector<int> covered;
        covered.reserve(best_count);
        for (std::size_t k = 0; k < n; ++k) {
            if (dist2(c, users[k]) <= reach2) {
                covered.push_back(static_cast<int>(k));
                scratch.push_back(users[k]);
            }
        }
        const double sec_radius = smallest_enclosing_circle(scratch).radius;
        const bool better =
            !have_best || sec_radius < best_sec_radius ||
            (sec_radius == best_sec_radius &&
             (c.x < best_center.x || (c.x == best_center.x && c.y < best_center.y)));
        if (better) {
            have_best = true;
            best_center = c;
            best_sec_radius = sec_radius;
            best_covered = std::move(covered);
        }
    }

    return {{best_center, radius_m}, std::move(best_covered)};
}

PlacementTrace place_3d_traced(std::span<const Point2D> users, const Environment& env,
                               const RadioConfig& radio) {
    if (users.empty())
        throw DataError("place_3d: user list is empty");
    env.validate();
    radio.validate();

    PlacementTrace trace;
    trace.vertical = solve_vertical(env, radio, radio.loss_budget_db());
    trace.initial = max_cover_disk(users, trace.vertical.radius_m);

    std::vector<Point2D> covered_pts;
    covered_pts.reserve(trace.initial.covered.size());
    for (int idx : trace.initial.covered) covered_pts.push_back(users[idx]);
    const Disk shrunk = smallest_enclosing_circle(covered_pts);

    const double h_geometric =
        altitude_for_radius(shrunk.radius, trace.vertical.elevation_rad);
    const bool clamped = h_geometric < radio.min_altitude_m;
    const double h = clamped ? radio.min_altitude_m : h_geometric;
    if (h <= 0.0 && shrunk.radius <= 0.0)
        throw NumericError("place_3d: zero altitude over a zero-radius cell; "
                           "raise min_altitude_m");

    Placement3D& out = trace.result;
    out.center = shrunk.center;
    out.altitude_m = h;
    out.radius_m = shrunk.radius;
    out.covered = trace.initial.covered;
    out.required_power_dbm =
        radio.rx_sensitivity_dbm + path_loss_db(env, radio, h, shrunk.radius);
    out.altitude_clamped = clamped;
    return trace;
}

Placement3D place_3d(std::span<const Point2D> users, const Environment& env,
                     const RadioConfig& radio) {
    return place_3d_traced(users, env, radio).result;
}

Placement3D random_baseline(std::span<const Point2D> users, const Environment& env,
                            const RadioConfig& radio, const Region& region, Rng& rng) {
    region.validate();
    env.validate();
    radio.validate();

    const VerticalSolution vs = solve_vertical(env, radio, radio.loss_budget_db());
    Placement3D out;
    out.center = {rng.uniform(region.x_min, region.x_max),
                  rng.uniform(region.y_min, region.y_max)};
    out.altitude_m = vs.altitude_m;
    out.radius_m = vs.radius_m;
    const double reach2 = (vs.radius_m + kCoverTol) * (vs.radius_m + kCoverTol);
    for (std::size_t i = 0; i < users.size(); ++i) {
        if (dist2(out.center, users[i]) <= reach2) out.covered.push_back(static_cast<int>(i));
    }
    out.required_power_dbm = radio.tx_power_dbm;
    out.altitude_clamped = false;
    return out;
}

}  // namespace uavbs
