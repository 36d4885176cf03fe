#pragma once

#include <cmath>

#include "uavbs/errors.hpp"

namespace uavbs {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

inline double dist2(const Point2D& a, const Point2D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist(const Point2D& a, const Point2D& b) {
    return std::sqrt(dist2(a, b));
}

struct Disk {
    Point2D center;
    double radius = 0.0;

    bool contains(const Point2D& p, double tol = 0.0) const {
        return dist(center, p) <= radius + tol;
    }
};

/* Axis-aligned rectangular deployment region, coordinates in metres. */
struct Region {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }

    bool contains(const Point2D& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }

    void validate() const {
        if (!(x_max > x_min) || !(y_max > y_min))
            throw DataError("region is degenerate: max bounds must exceed min bounds");
        if (!std::isfinite(x_min) || !std::isfinite(x_max) ||
            !std::isfinite(y_min) || !std::isfinite(y_max))
            throw DataError("region bounds must be finite");
    }
};

}  // namespace uavbs
