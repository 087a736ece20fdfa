#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lagcap/capacities.hpp"
#include "lagcap/errors.hpp"

using namespace lagcap;

namespace {
constexpr double kPi = std::numbers::pi;

// (vol T^n vol B^n / vol CP^n)^(1/n) with vol CP^n = pi^n / n!, through lgamma
double volume_constant_oracle(int n) {
    const double log_torus = n * std::log(2 * kPi);
    const double log_ball = 0.5 * n * std::log(kPi) - std::lgamma(0.5 * n + 1);
    const double log_cpn = n * std::log(kPi) - std::lgamma(n + 1.0);
    return std::exp((log_torus + log_ball - log_cpn) / n);
}
}  // namespace

TEST_CASE("closed-form capacities") {
    for (int n = 1; n <= 8; ++n) {
        for (double r : {0.5, 1.0, 2.5}) {
            const auto ball = lagrangian_capacity(Domain::ball(n, r));
            CHECK(ball.value == doctest::Approx(kPi * r * r / n).epsilon(1e-14));
            CHECK(ball.status == CapacityStatus::proved);
            CHECK(ball.citation == "Cor. cap");
            CHECK(lagrangian_capacity(Domain::cylinder(n, r)).value == doctest::Approx(kPi * r * r).epsilon(1e-14));
            CHECK(lagrangian_capacity(Domain::polydisk(n, r)).value == doctest::Approx(kPi * r * r).epsilon(1e-14));
        }
    }
}

TEST_CASE("round ellipsoids agree with balls") {
    for (int n = 1; n <= 5; ++n) {
        const auto e = lagrangian_capacity(Domain::ellipsoid(std::vector<double>(n, 1.0)));
        CHECK(e.value == doctest::Approx(kPi / n).epsilon(1e-14));
        CHECK(e.status == CapacityStatus::conjectural);
    }
    CHECK(lagrangian_capacity(Domain::ellipsoid({1.0, 3.0})).value == doctest::Approx(kPi * 0.75));
}

TEST_CASE("all-Lagrangian variant") {
    const auto v2 = lagrangian_capacity_all_lagrangians(Domain::ball(2));
    CHECK(v2.status == CapacityStatus::proved);
    CHECK(v2.value == doctest::Approx(kPi / 2));
    const auto v3 = lagrangian_capacity_all_lagrangians(Domain::ball(3));
    CHECK(v3.status == CapacityStatus::unknown);
    CHECK(std::isnan(v3.value));
    CHECK(v3.lower_bound == doctest::Approx(kPi / 3));
}

TEST_CASE("embedding and chord bounds") {
    CHECK(polydisk_embeds_ball(4, 0.5));
    CHECK_FALSE(polydisk_embeds_ball(4, 0.51));
    CHECK(a_min_standard_torus(2.0) == doctest::Approx(4 * kPi));
    CHECK(chord_bound(Domain::ball(2)).value == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(chord_bound(Domain::cylinder(2)), InputError);
}

TEST_CASE("flat-torus constants") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(flat_torus_volume_constant(n) == doctest::Approx(volume_constant_oracle(n)).epsilon(1e-12));
        CHECK(flat_torus_upper_bound(n) == doctest::Approx(2 * (n + std::sqrt(n))).epsilon(1e-14));
        CHECK(flat_torus_max_norm_squared(n) == doctest::Approx(flat_torus_upper_bound(n)).epsilon(1e-14));
        if (n >= 2) CHECK(flat_torus_volume_constant(n) < 2.0 * (n + 1));
        const auto w = weinstein_bounds(MetricSpec::flat_torus(n), n);
        CHECK(w.geodesic_bound == doctest::Approx(2.0 * (n + 1)));
        CHECK(w.best == doctest::Approx(std::max(w.geodesic_bound, w.volume_bound)));
    }
    CHECK(flat_torus_volume_constant(1) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(unit_ball_volume(2) == doctest::Approx(kPi));
    CHECK(unit_ball_volume(3) == doctest::Approx(4 * kPi / 3));
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(Domain::ellipsoid({2.0, 1.0}).validate(), InputError);
    CHECK_THROWS_AS(Domain::ball(0).validate(), InputError);
    CHECK_THROWS_AS(Domain::polydisk(2, -1.0).validate(), InputError);
    CHECK(domain_kind_from_string("polydisk") == DomainKind::polydisk);
    CHECK_THROWS_AS(domain_kind_from_string("torus-ish"), InputError);
}
