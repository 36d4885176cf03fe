#include <doctest.h>

#include <cmath>

#include "uavbs/channel.hpp"

using namespace uavbs;

namespace {

const Environment& urban() { return environment_preset("urban"); }

RadioConfig default_radio() { return {}; }  // 2 GHz, 30 dBm, -70 dBm, 100 m

/* Reference evaluation in the (r, theta) parameterization: the excess term
 * plus free-space loss over r / cos(theta).  Only valid for r > 0. */
double path_loss_polar(const Environment& env, const RadioConfig& radio, double h,
                       double r) {
    const double theta = std::atan2(h, r);
    const double p = los_probability_at_elevation(env, theta);
    return env.excess_delta_db() * p + 20.0 * std::log10(r / std::cos(theta)) +
           nlos_reference_loss_db(env, radio);
}

}  // namespace

TEST_CASE("los probability matches reference value at 45 degrees, urban") {
    // Independently computed with a scripted high-precision evaluation.
    CHECK(los_probability(urban(), 1000.0, 1000.0) ==
          doctest::Approx(0.9676918999472423).epsilon(1e-12));
}

TEST_CASE("los probability closed form at zero elevation") {
    for (const Environment& env : environment_presets()) {
        const double expected =
            1.0 / (1.0 + env.s_curve_a * std::exp(env.s_curve_a * env.s_curve_b));
        CHECK(los_probability(env, 0.0, 500.0) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("los probability increases with altitude at fixed range") {
    for (const Environment& env : environment_presets()) {
        double prev = los_probability(env, 0.0, 500.0);
        for (double h = 50.0; h <= 5000.0; h += 50.0) {
            const double p = los_probability(env, h, 500.0);
            // Strictly monotone until the sigmoid saturates against the
            // 1.0 representation ceiling (suburban reaches ~1 - 7e-15 at
            // the top of this scan, where neighbours round together).
            if (prev < 1.0 - 1e-12) {
                CHECK(p > prev);
            } else {
                CHECK(p >= prev);
            }
            prev = p;
        }
    }
}

TEST_CASE("los probability stays within (0, 1) and rejects the undefined origin") {
    for (const Environment& env : environment_presets()) {
        for (double h : {0.0, 1.0, 100.0, 10000.0}) {
            for (double r : {1.0, 100.0, 10000.0}) {
                const double p = los_probability(env, h, r);
                CHECK(p > 0.0);
                CHECK(p < 1.0);
            }
        }
    }
    CHECK_THROWS_AS(los_probability(urban(), 0.0, 0.0), NumericError);
    CHECK_THROWS_AS(los_probability(urban(), -1.0, 10.0), NumericError);
}

TEST_CASE("path loss matches reference value for urban at h = r = 1000 m") {
    // Independently computed: A = -19, B = 58.468383135162995, p_los = 0.96769...
    const double loss = path_loss_db(urban(), default_radio(), 1000.0, 1000.0);
    CHECK(loss == doctest::Approx(103.09253699280521).epsilon(1e-12));
    CHECK(nlos_reference_loss_db(urban(), default_radio()) ==
          doctest::Approx(58.468383135162995).epsilon(1e-12));
}

TEST_CASE("path loss nadir form at r = 0") {
    const RadioConfig radio = default_radio();
    for (const Environment& env : environment_presets()) {
        for (double h : {50.0, 100.0, 1000.0}) {
            const double p_vertical = los_probability_at_elevation(env, kPi / 2.0);
            const double expected = env.excess_delta_db() * p_vertical +
                                    20.0 * std::log10(h) +
                                    nlos_reference_loss_db(env, radio);
            CHECK(path_loss_db(env, radio, h, 0.0) ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(path_loss_db(urban(), default_radio(), 0.0, 0.0), NumericError);
}

TEST_CASE("path loss is strictly increasing in range for every preset") {
    // Dense scan; this monotonicity is what makes bisection on range valid.
    const RadioConfig radio = default_radio();
    for (const Environment& env : environment_presets()) {
        for (double h : {10.0, 100.0, 1000.0, 3000.0}) {
            double prev = path_loss_db(env, radio, h, 1.0);
            for (double r = 2.0; r <= 10000.0; r += 1.0) {
                const double loss = path_loss_db(env, radio, h, r);
                CHECK(loss > prev);
                prev = loss;
            }
        }
    }
}

TEST_CASE("path loss along fixed-elevation rays grows exactly with range") {
    const RadioConfig radio = default_radio();
    for (const Environment& env : environment_presets()) {
        for (double theta_deg : {10.0, 42.0, 80.0}) {
            const double t = std::tan(deg2rad(theta_deg));
            double prev = path_loss_db(env, radio, 1.0 * t, 1.0);
            for (double r = 10.0; r <= 10000.0; r *= 1.5) {
                const double loss = path_loss_db(env, radio, r * t, r);
                CHECK(loss > prev);
                prev = loss;
            }
        }
    }
}

TEST_CASE("distance form equals the polar form for r > 0") {
    const RadioConfig radio = default_radio();
    for (const Environment& env : environment_presets()) {
        for (double h : {0.0, 10.0, 500.0, 2000.0}) {
            for (double r : {0.5, 10.0, 300.0, 8000.0}) {
                CHECK(std::abs(path_loss_db(env, radio, h, r) -
                               path_loss_polar(env, radio, h, r)) < 1e-9);
            }
        }
    }
}

TEST_CASE("received power and the coverage rule") {
    const RadioConfig radio = default_radio();
    CHECK(received_power_dbm(radio, 100.0) == doctest::Approx(-70.0));
    CHECK(is_covered(radio, 100.0));  // exactly at sensitivity: covered
    CHECK(received_power_dbm(radio, 0.0) == doctest::Approx(30.0));
    const double loss = path_loss_db(urban(), radio, 1000.0, 1000.0);
    CHECK(received_power_dbm(radio, loss) ==
          doctest::Approx(-73.09253699280521).epsilon(1e-12));
    CHECK(!is_covered(radio, loss));  // below -70 dBm sensitivity
}

TEST_CASE("coverage radius: nadir over budget and residual at the returned edge") {
    const RadioConfig radio = default_radio();
    CHECK(coverage_radius_at(urban(), radio, 100000.0, 100.0) == 0.0);

    for (const Environment& env : environment_presets()) {
        for (double h : {80.0, 300.0, 900.0, 2500.0}) {
            for (double budget : {96.0, 100.0, 103.0}) {
                const double radius = coverage_radius_at(env, radio, h, budget);
                if (radius > 0.0) {
                    CHECK(std::abs(path_loss_db(env, radio, h, radius) - budget) <=
                          1e-3);
                }
            }
        }
    }
}

TEST_CASE("validation rejects out-of-contract environments and radios") {
    Environment bad = urban();
    bad.s_curve_a = 0.0;
    CHECK_THROWS_AS(bad.validate(), DataError);
    bad = urban();
    bad.excess_nlos_db = bad.excess_los_db;  // A must stay negative
    CHECK_THROWS_AS(bad.validate(), DataError);

    RadioConfig radio;
    radio.tx_power_dbm = -80.0;  // below sensitivity
    CHECK_THROWS_AS(radio.validate(), DataError);
    radio = RadioConfig{};
    radio.carrier_hz = 0.0;
    CHECK_THROWS_AS(radio.validate(), DataError);

    CHECK_THROWS_AS(environment_preset("metropolis"), DataError);
    CHECK(environment_presets().size() == 4);
    CHECK(default_radio().loss_budget_db() == doctest::Approx(100.0));
}
