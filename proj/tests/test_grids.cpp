#include <doctest.h>

#include <random>

#include "ringshaper/errors.hpp"
#include "ringshaper/grids.hpp"

using namespace ringshaper;

TEST_CASE("omega/z mapping and inverses") {
    const double k = 9.5e6;
    CHECK(omega_of_z(1000.0, k) == doctest::Approx(4750.0));
    CHECK(omega_of_z(1000.0, 9.5e6) == doctest::Approx(4750.0));
    CHECK(z_of_omega(4750.0, 9.5e6) == doctest::Approx(1000.0));
    CHECK(z_of_omega(omega_of_z(137.5, k), k) == doctest::Approx(137.5).epsilon(1e-14));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(1e-6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double z = dist(rng);
        CHECK(z_of_omega(omega_of_z(z, k), k) == doctest::Approx(z).epsilon(1e-14));
        const double w1 = dist(rng), w2 = dist(rng);
        if (w1 < w2) CHECK(z_of_omega(w1, k) > z_of_omega(w2, k));
    }
    CHECK_THROWS_AS(omega_of_z(0.0, k), std::domain_error);
    CHECK_THROWS_AS(omega_of_z(-1.0, k), std::domain_error);
    CHECK_THROWS_AS(z_of_omega(0.0, k), std::domain_error);
}

TEST_CASE("build_grids endpoints and invariants") {
    DesignParams p{9.5e6, 0.3, 0.42, 1000.0, 263.21, 1.0, 1.0};
    auto [s, w] = build_grids(p, 64, 64);
    // endpoints are exact squares of the r-support endpoints
    CHECK(s.s_min == (0.3 - 0.21) * (0.3 - 0.21));
    CHECK(s.s_max == (0.3 + 0.21) * (0.3 + 0.21));
    CHECK(s.s_min == doctest::Approx(0.0081));
    CHECK(s.s_max == doctest::Approx(0.260100));
    CHECK(w.omega_min == doctest::Approx(9.5e6 / 2263.21));
    CHECK(w.omega_max == doctest::Approx(9.5e6 / 1736.79));
    CHECK(w.omega_min > 0.0);
    CHECK(w.omega_min < w.omega_max);

    SUBCASE("degenerate ring width") {
        DesignParams bad = p;
        bad.W0 = 2.0 * bad.r0;
        CHECK_THROWS_AS(build_grids(bad, 64, 64), ConfigError);
    }
    SUBCASE("target interval touching the source plane") {
        DesignParams bad = p;
        bad.WT = 2.0 * bad.zd;
        CHECK_THROWS_AS(build_grids(bad, 64, 64), ConfigError);
    }
    SUBCASE("sample count floor") { CHECK_THROWS_AS(build_grids(p, 8, 64), ConfigError); }
}
