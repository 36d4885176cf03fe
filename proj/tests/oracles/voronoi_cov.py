#!/usr/bin/env python3
"""Reference values for the spatial dispersion tests (test_spatial.cpp).

Independent Voronoi construction: scipy.spatial.Voronoi on the point set
mirrored across all four region edges (so every interior cell is bounded
and clips exactly to the rectangle), cell polygons via shapely.  Produces:

  * the dispersion (CoV of clipped cell areas / 0.529) of the frozen
    20-point set embedded in test_spatial.cpp,
  * the mean dispersion of uniform scatters (the 0.529 normalisation
    target, ~1.0),
  * the dispersion of a perfect lattice (~0).

Run: python3 voronoi_cov.py
"""

import numpy as np
from scipy.spatial import Voronoi
from shapely.geometry import Polygon

NORMALISATION = 0.529

# Frozen 20-point set, identical to the literals in test_spatial.cpp.
POINTS_20 = np.array([
    [22.7336, 31.6758], [79.7365, 67.6255], [39.1110, 33.2814],
    [59.8309, 18.6734], [67.2756, 94.1803], [24.8246, 94.8881],
    [66.7237, 9.5898],  [44.1840, 88.6480], [69.7453, 32.6473],
    [73.3928, 22.0135], [8.1595, 15.9896],  [34.0100, 46.5193],
    [26.6421, 81.5776], [19.3294, 12.9469], [9.1665, 59.8568],
    [85.4742, 60.1621], [93.1988, 72.4781], [86.0551, 92.9338],
    [54.6186, 93.7673], [49.4988, 27.3773]])


def cell_areas(points, x_min, x_max, y_min, y_max):
    """Voronoi cell areas clipped to the rectangle, in input order."""
    pts = np.asarray(points, dtype=float)
    mirrored = [pts]
    for axis, lo, hi in ((0, x_min, x_max), (1, y_min, y_max)):
        for edge in (lo, hi):
            m = pts.copy()
            m[:, axis] = 2 * edge - m[:, axis]
            mirrored.append(m)
    vor = Voronoi(np.vstack(mirrored))
    box = Polygon([(x_min, y_min), (x_max, y_min), (x_max, y_max), (x_min, y_max)])
    areas = np.empty(len(pts))
    for i in range(len(pts)):
        region = vor.regions[vor.point_region[i]]
        cell = Polygon(vor.vertices[region]).intersection(box)
        areas[i] = cell.area
    return areas


def cov(points, x_min=0.0, x_max=100.0, y_min=0.0, y_max=100.0):
    a = cell_areas(points, x_min, x_max, y_min, y_max)
    return a.std() / a.mean() / NORMALISATION, a.sum()


def main():
    c, total = cov(POINTS_20)
    print(f"20-point set: CoV = {c!r}, area sum = {total!r}")

    lattice = np.array([[(i + 0.5) * 10, (j + 0.5) * 10]
                        for i in range(10) for j in range(10)])
    print(f"10x10 lattice: CoV = {cov(lattice)[0]:.3e}")

    rng = np.random.default_rng(12345)
    values = [cov(rng.uniform(0, 100, size=(200, 2)))[0] for _ in range(100)]
    print(f"uniform scatter (200 pts, 100 draws): mean CoV = {np.mean(values):.4f} "
          f"+/- {np.std(values) / 10:.4f}")


if __name__ == "__main__":
    main()
