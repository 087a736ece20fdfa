#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lagcap/errors.hpp"
#include "lagcap/symplectic_index.hpp"
#include "support.hpp"

using namespace lagcap;
using test::Rng;

namespace {
constexpr double kPi = std::numbers::pi;

// CZ of t -> exp(theta t J0) on R^2 for theta not a multiple of 2 pi
int rotation_cz(double theta) { return 2 * static_cast<int>(std::floor(theta / (2 * kPi))) + 1; }
}  // namespace

TEST_CASE("rotation paths match the closed form") {
    for (double theta : {0.3, 2.0, 4.0, 7.0, 10.0, 14.0, 20.0}) {
        CAPTURE(theta);
        const auto path = test::rotation_path(theta, 257);
        CHECK(conley_zehnder(path) == rotation_cz(theta));
        CHECK(robbin_salamon(path) == HalfInteger(rotation_cz(theta)));
    }
}

TEST_CASE("degenerate rotations get half-integer endpoint contributions") {
    // crossings at t = 0 and t = 1 carry signature 2
    for (int k = 1; k <= 3; ++k) {
        const auto path = test::rotation_path(2 * kPi * k, 257);
        CHECK(robbin_salamon(path) == HalfInteger(2 * k));
        CHECK_THROWS_AS(conley_zehnder(path), PreconditionError);
    }
}

TEST_CASE("shear and hyperbolic paths") {
    const auto shear = SymplecticPath::sample(
        1, [](double t) { Matrix m = Matrix::Identity(2, 2); m(0, 1) = t; return m; }, 65);
    CHECK(robbin_salamon(shear) == HalfInteger::from_twice(1));
    CHECK(endpoint_degeneracy(shear) < 1e-12);

    const auto hyperbolic = SymplecticPath::sample(
        1, [](double t) { Matrix m = Matrix::Zero(2, 2); m(0, 0) = std::exp(t); m(1, 1) = std::exp(-t); return m; }, 65);
    CHECK(conley_zehnder(hyperbolic) == 0);
}

TEST_CASE("index properties over random paths") {
    Rng rng(7);
    for (int n : {1, 2}) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto path = test::random_path(rng, n);
            const HalfInteger rs = robbin_salamon(path);
            CHECK(robbin_salamon(refine(path)) == rs);
            CHECK(robbin_salamon(prepend_rotation_loop(path)) == rs + HalfInteger(2));
            const auto other = test::random_path(rng, 1);
            CHECK(robbin_salamon(direct_sum(path, other)) == rs + robbin_salamon(other));
            if (endpoint_degeneracy(path) > 1e-6) CHECK(HalfInteger(conley_zehnder(path)) == rs);
        }
    }
}

TEST_CASE("refinement stays symplectic") {
    Rng rng(11);
    const auto path = refine(refine(test::random_path(rng, 2, 33)));
    for (const auto& m : path.matrices()) CHECK(check_symplectic(m, 1e-9));
}

TEST_CASE("change of trivialization by a loop of rotations shifts the index by 2 per turn") {
    const auto path = test::rotation_path(1.0);
    std::vector<Matrix> frame;
    for (double t : path.times()) frame.push_back(plane_rotation(1, 0, 2 * kPi * t));
    CHECK(robbin_salamon(change_trivialization(path, frame)) == robbin_salamon(path) + HalfInteger(2));
}

TEST_CASE("maslov index of u(t) = exp(i pi m t) times a fixed line") {
    // frame columns are (Re U, -Im U) for z = q - i p
    for (int m : {-3, -1, 0, 1, 2, 5}) {
        std::vector<Matrix> frames;
        const int samples = 16 * (std::abs(m) + 1) + 1;
        for (int s = 0; s < samples; ++s) {
            const double phase = kPi * m * s / (samples - 1);
            Matrix f = Matrix::Zero(4, 2);
            f(0, 0) = std::cos(phase);
            f(2, 0) = -std::sin(phase);
            f(1, 1) = 1.0;
            frames.push_back(f);
        }
        CAPTURE(m);
        CHECK(maslov_loop(LagrangianLoop(2, frames)) == m);
    }
}

TEST_CASE("flat-torus families satisfy the index relation") {
    for (int n = 1; n <= 6; ++n) {
        GeodesicClass g{std::vector<int>(n, 0)};
        g.k[0] = 1;
        if (n > 1) g.k[n - 1] = 2;
        const HalfInteger rs = robbin_salamon(linearized_geodesic_path(g));
        CHECK(rs == HalfInteger::from_twice(n - 1));
        CHECK(bott_cz(rs, g.bott_dim()) == 0);
        CHECK(viterbo_relation(0, 0, GeodesicClass::morse_index()));
    }
}

TEST_CASE("taming margin") {
    CHECK(taming_margin(1.0, 1.0, 10'000) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(taming_margin(1.0, 0.0, 1000) >= 1.0 - 1e-15);
    CHECK(taming_margin(2.0, 1.0, 1000) > 0.5);
}

TEST_CASE("input validation") {
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = 2.0;
    CHECK_FALSE(check_symplectic(bad, 1e-9));
    CHECK_THROWS_AS(SymplecticPath(1, {0.0, 1.0}, {Matrix::Identity(2, 2), bad}), InputError);
    CHECK_THROWS_AS(SymplecticPath(1, {0.0, 0.5}, {Matrix::Identity(2, 2), Matrix::Identity(2, 2)}), InputError);
    CHECK_THROWS(check_symplectic(Matrix::Identity(3, 3), 1e-9));
}
