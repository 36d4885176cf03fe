#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "uavbs/spatial.hpp"

using namespace uavbs;

namespace {

const Region kBox3km{0.0, 3000.0, 0.0, 3000.0};

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

/* Mean dispersion coefficient over many draws from a point sampler.
 * Draws with fewer than three points are skipped. */
template <typename Sampler>
double mean_cov(Sampler&& sample, const Region& region, int draws) {
    std::vector<double> values;
    for (int i = 0; i < draws; ++i) {
        const std::vector<Point2D> pts = sample(i);
        if (pts.size() < 3) continue;
        values.push_back(voronoi_cov(pts, region));
    }
    REQUIRE(!values.empty());
    return mean_of(values);
}

}  // namespace

TEST_CASE("thomas parameters validate and derive the parent intensity") {
    ThomasParams p;
    p.total_intensity_per_km2 = 9.0;
    p.mean_offspring = 55.0;
    CHECK(p.effective_parent_intensity_per_km2() ==
          doctest::Approx(9.0 / 55.0).epsilon(1e-12));
    CHECK_NOTHROW(p.validate());

    ThomasParams direct;
    direct.parent_intensity_per_km2 = 0.5;
    CHECK(direct.effective_parent_intensity_per_km2() == doctest::Approx(0.5));

    ThomasParams bad;
    bad.mean_offspring = 0.0;
    bad.total_intensity_per_km2 = 9.0;
    CHECK_THROWS_AS(bad.validate(), DataError);
    ThomasParams neither;  // no parent and no total intensity
    CHECK_THROWS_AS(neither.validate(), DataError);
    ThomasParams negative_sigma;
    negative_sigma.total_intensity_per_km2 = 9.0;
    negative_sigma.sigma_m = -1.0;
    CHECK_THROWS_AS(negative_sigma.validate(), DataError);
}

TEST_CASE("thomas sampling is deterministic and stays inside the region") {
    ThomasParams p;
    p.total_intensity_per_km2 = 9.0;
    p.sigma_m = 150.0;
    Rng a(42), b(42);
    const std::vector<Point2D> s1 = sample_thomas(kBox3km, p, a);
    const std::vector<Point2D> s2 = sample_thomas(kBox3km, p, b);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i].x == s2[i].x);
        CHECK(s1[i].y == s2[i].y);
        CHECK(kBox3km.contains(s1[i]));
    }
}

TEST_CASE("thomas total intensity is honoured on average") {
    // 9 users/km^2 over 9 km^2 -> 81 expected points per draw.
    ThomasParams p;
    p.total_intensity_per_km2 = 9.0;
    p.mean_offspring = 55.0;
    p.sigma_m = 150.0;
    double total = 0.0;
    const int draws = 400;
    for (int i = 0; i < draws; ++i) {
        Rng rng(mix64(1000 + i));
        total += static_cast<double>(sample_thomas(kBox3km, p, rng).size());
    }
    const double mean = total / draws;
    CHECK(mean > 81.0 * 0.9);
    CHECK(mean < 81.0 * 1.1);
}

TEST_CASE("voronoi cell areas partition the region") {
    // Frozen 20-point set drawn uniformly over a 100 m box.
    const std::vector<Point2D> pts = {
        {22.7336, 31.6758}, {79.7365, 67.6255}, {39.1110, 33.2814},
        {59.8309, 18.6734}, {67.2756, 94.1803}, {24.8246, 94.8881},
        {66.7237, 9.5898},  {44.1840, 88.6480}, {69.7453, 32.6473},
        {73.3928, 22.0135}, {8.1595, 15.9896},  {34.0100, 46.5193},
        {26.6421, 81.5776}, {19.3294, 12.9469}, {9.1665, 59.8568},
        {85.4742, 60.1621}, {93.1988, 72.4781}, {86.0551, 92.9338},
        {54.6186, 93.7673}, {49.4988, 27.3773}};
    const Region box{0.0, 100.0, 0.0, 100.0};
    const std::vector<double> areas = voronoi_cell_areas(pts, box);
    REQUIRE(areas.size() == pts.size());
    double sum = 0.0;
    for (double a : areas) {
        CHECK(a > 0.0);
        sum += a;
    }
    CHECK(sum == doctest::Approx(box.area()).epsilon(1e-9));

    // Frozen dispersion value for the same set (independent reference
    // implementation agreed to 13 digits).
    CHECK(voronoi_cov(pts, box) == doctest::Approx(0.5909720973646633).epsilon(1e-6));
}

TEST_CASE("voronoi partition invariant holds on random configurations") {
    for (int instance = 0; instance < 20; ++instance) {
        Rng rng(61000 + instance);
        std::vector<Point2D> pts;
        const int n = 3 + static_cast<int>(rng.index(40));
        for (int i = 0; i < n; ++i)
            pts.push_back({rng.uniform(0.0, 3000.0), rng.uniform(0.0, 3000.0)});
        const std::vector<double> areas = voronoi_cell_areas(pts, kBox3km);
        const double sum = std::accumulate(areas.begin(), areas.end(), 0.0);
        CHECK(std::abs(sum - kBox3km.area()) <= 1e-6 * kBox3km.area());
        for (double a : areas) CHECK(a > 0.0);
    }
}

TEST_CASE("voronoi dispersion anchors: lattice, uniform, clustered") {
    // Perfect 10x10 lattice: all cells congruent, dispersion zero.
    std::vector<Point2D> lattice;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            lattice.push_back({(i + 0.5) * 10.0, (j + 0.5) * 10.0});
    const Region box{0.0, 100.0, 0.0, 100.0};
    CHECK(voronoi_cov(lattice, box) < 1e-9);

    // Uniform points: the 0.529 normaliser makes the mean dispersion ~1.
    const double uniform_cov = mean_cov(
        [&](int i) {
            Rng rng(mix64(2000 + i));
            std::vector<Point2D> pts;
            for (int k = 0; k < 200; ++k)
                pts.push_back({rng.uniform(0.0, 3000.0), rng.uniform(0.0, 3000.0)});
            return pts;
        },
        kBox3km, 40);
    CHECK(uniform_cov > 0.9);
    CHECK(uniform_cov < 1.1);

    // Two tight clusters: strongly heterogeneous, dispersion well above 1.
    Rng rng(99);
    std::vector<Point2D> clustered;
    for (int k = 0; k < 30; ++k) {
        clustered.push_back({500.0 + 20.0 * rng.normal(), 500.0 + 20.0 * rng.normal()});
        clustered.push_back({2500.0 + 20.0 * rng.normal(), 2500.0 + 20.0 * rng.normal()});
    }
    std::vector<Point2D> inside;
    for (const Point2D& p : clustered)
        if (kBox3km.contains(p)) inside.push_back(p);
    CHECK(voronoi_cov(inside, kBox3km) > 1.5);
}

TEST_CASE("voronoi rejects degenerate input") {
    const Region box{0.0, 100.0, 0.0, 100.0};
    const std::vector<Point2D> too_few = {{1, 1}, {2, 2}};
    const std::vector<Point2D> collinear = {{1, 1}, {2, 2}, {3, 3}};
    const std::vector<Point2D> duplicated = {{1, 1}, {1, 1}, {2, 5}};
    const std::vector<Point2D> outside = {{1, 1}, {2, 5}, {300, 5}};
    CHECK_THROWS_AS(voronoi_cell_areas(too_few, box), DataError);
    CHECK_THROWS_AS(voronoi_cell_areas(collinear, box), DataError);
    CHECK_THROWS_AS(voronoi_cell_areas(duplicated, box), DataError);
    CHECK_THROWS_AS(voronoi_cell_areas(outside, box), DataError);
}

TEST_CASE("dispersion rises as the cluster spread shrinks") {
    ThomasParams p;
    p.total_intensity_per_km2 = 9.0;
    p.mean_offspring = 55.0;
    auto cov_at = [&](double sigma) {
        p.sigma_m = sigma;
        return mean_cov(
            [&](int i) {
                Rng rng(mix64(3000 + i));
                return sample_thomas(kBox3km, p, rng);
            },
            kBox3km, 60);
    };
    const double tight = cov_at(50.0);
    const double medium = cov_at(300.0);
    const double wide = cov_at(1500.0);
    CHECK(tight > medium);
    CHECK(medium > wide);
    CHECK(tight > 3.0);   // 50 m clusters are extremely heterogeneous
    CHECK(wide < 2.0);    // 1.5 km spread approaches uniformity
}

TEST_CASE("sigma calibration hits the requested dispersion") {
    ThomasParams p;
    p.total_intensity_per_km2 = 9.0;
    p.mean_offspring = 55.0;
    CalibrationOptions opts;
    opts.replications = 48;

    Rng rng(2024);
    const double sigma5 = calibrate_sigma(kBox3km, p, 5.0, rng, opts);
    CHECK(sigma5 >= opts.sigma_floor_m);
    CHECK(sigma5 <= 3000.0);

    // Re-measure at the calibrated spread with fresh seeds.
    ThomasParams q = p;
    q.sigma_m = sigma5;
    const double measured = mean_cov(
        [&](int i) {
            Rng r(mix64(880000 + i));
            return sample_thomas(kBox3km, q, r);
        },
        kBox3km, 200);
    CHECK(std::abs(measured - 5.0) < 0.4);

    // Less heterogeneity needs a wider spread.
    Rng rng2(2024);
    const double sigma3 = calibrate_sigma(kBox3km, p, 3.0, rng2, opts);
    CHECK(sigma3 > sigma5);

    // A target of 1 (homogeneous) saturates at the region-extent cap.
    Rng rng3(77);
    const double sigma1 = calibrate_sigma(kBox3km, p, 1.0, rng3, opts);
    CHECK(sigma1 == doctest::Approx(3000.0));

    Rng rng4(1);
    CHECK_THROWS_AS(calibrate_sigma(kBox3km, p, 0.5, rng4, opts), DataError);
}
