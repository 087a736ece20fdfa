#include <algorithm>
#include <complex>
#include <numeric>

#include "doctest.h"
#include "lagcap/enumerative.hpp"
#include "lagcap/errors.hpp"
#include "support.hpp"

using namespace lagcap;
using test::Rng;
using Eigen::VectorXcd;

namespace {

std::vector<double> random_weights(Rng& rng, int count) {
    std::uniform_real_distribution<double> u(0.1, 10.0);
    std::vector<double> a(count);
    for (double& x : a) x = u(rng);
    return a;
}

// every point of `expected` matches exactly one point of `got`
bool same_projective_set(const std::vector<VectorXcd>& got, const std::vector<VectorXcd>& expected, double tol) {
    if (got.size() != expected.size()) return false;
    std::vector<bool> used(got.size(), false);
    for (const auto& e : expected) {
        bool found = false;
        for (std::size_t i = 0; i < got.size(); ++i) {
            if (!used[i] && projective_distance(got[i], e) < tol) {
                used[i] = found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// n = 2 by hand: z2 = 1, z0 = -(a1 z1 + a2)/a0, then a quadratic in z1
std::vector<VectorXcd> quadratic_oracle(const std::vector<double>& a) {
    const Complex A = a[1] * a[1] / a[0] + a[1];
    const Complex B = 2.0 * a[1] * a[2] / a[0];
    const Complex C = a[2] * a[2] / a[0] + a[2];
    const Complex disc = std::sqrt(B * B - 4.0 * A * C);
    std::vector<VectorXcd> out;
    for (const Complex z1 : {(-B + disc) / (2.0 * A), (-B - disc) / (2.0 * A)}) {
        VectorXcd z(3);
        z << -(a[1] * z1 + a[2]) / a[0], z1, 1.0;
        out.push_back(z);
    }
    return out;
}

// Newton from random starts on the affine chart z3 = 1, collecting distinct limits
std::vector<VectorXcd> newton_oracle(const std::vector<double>& a, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<VectorXcd> found;
    for (int start = 0; start < 400 && found.size() < 6; ++start) {
        Eigen::Vector3cd x(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
        bool converged = false;
        for (int it = 0; it < 80; ++it) {
            Eigen::Vector3cd f;
            Eigen::Matrix3cd jac;
            for (int k = 1; k <= 3; ++k) {
                f(k - 1) = a[3];
                for (int i = 0; i < 3; ++i) {
                    f(k - 1) += a[i] * std::pow(x(i), k);
                    jac(k - 1, i) = a[i] * static_cast<double>(k) * std::pow(x(i), k - 1);
                }
            }
            if (f.norm() < 1e-13) {
                converged = true;
                break;
            }
            x -= jac.partialPivLu().solve(f);
            if (!x.allFinite() || x.norm() > 1e6) break;
        }
        if (!converged) continue;
        VectorXcd z(4);
        z << x(0), x(1), x(2), 1.0;
        if (std::none_of(found.begin(), found.end(), [&](const auto& p) { return projective_distance(p, z) < 1e-6; }))
            found.push_back(z);
    }
    return found;
}

}  // namespace

TEST_CASE("n = 2 solutions match the quadratic formula") {
    Rng rng(1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = trial == 0 ? std::vector<double>{1, 1, 1} : random_weights(rng, 3);
        const auto s = count_projective_intersections(a);
        REQUIRE(s.size() == 2);
        CHECK(same_projective_set(s.points, quadratic_oracle(a), 1e-9));
    }
}

TEST_CASE("n = 3 solutions match random-start Newton") {
    Rng rng(2);
    for (int trial = 0; trial < 8; ++trial) {
        const auto a = trial == 0 ? std::vector<double>{1, 1, 1, 1} : random_weights(rng, 4);
        const auto s = count_projective_intersections(a);
        REQUIRE(s.size() == 6);
        const auto oracle = newton_oracle(a, rng);
        REQUIRE(oracle.size() == 6);
        CHECK(same_projective_set(s.points, oracle, 1e-8));
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s.residuals[i] < 1e-10);
            CHECK(s.jacobian_min_sv[i] > 1e-6);
            CHECK(s.multiplicities[i] == 1);
            CHECK(std::abs(s.points[i].norm() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("solutions are invariant under rescaling the weights") {
    Rng rng(3);
    const auto a = random_weights(rng, 4);
    auto b = a;
    for (double& x : b) x *= 3.7;
    CHECK(same_projective_set(count_projective_intersections(a).points, count_projective_intersections(b).points, 1e-9));
}

TEST_CASE("permuting the weights permutes the coordinates") {
    Rng rng(4);
    const auto a = random_weights(rng, 4);
    const std::vector<int> perm{2, 0, 3, 1};
    std::vector<double> b(4);
    for (int i = 0; i < 4; ++i) b[i] = a[perm[i]];
    std::vector<VectorXcd> mapped;
    for (const auto& p : count_projective_intersections(a).points) {
        VectorXcd q(4);
        for (int i = 0; i < 4; ++i) q(i) = p(perm[i]);
        mapped.push_back(q);
    }
    CHECK(same_projective_set(count_projective_intersections(b).points, mapped, 1e-9));
}

TEST_CASE("results do not depend on the random coordinate change") {
    const std::vector<double> a{1.0, 2.0, 3.0, 4.0};
    SolverOptions o1, o2;
    o2.seed = 99;
    const auto s1 = count_projective_intersections(a, o1);
    const auto s2 = count_projective_intersections(a, o2);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) CHECK(projective_distance(s1.points[i], s2.points[i]) < 1e-9);
}

TEST_CASE("tangency counts and the jet identity") {
    Rng rng(5);
    for (int n = 2; n <= 4; ++n) {
        const auto a = random_weights(rng, n);
        const auto s = count_tangency_lines(n, a);
        CHECK(s.size() == static_cast<std::size_t>(std::tgamma(n) + 0.5));
        for (const auto& p : s.points)
            for (int k = 1; k < n; ++k) CHECK(jet_identity_check(p, k, a) < 1e-12);
    }
    // arbitrary points, not only solutions
    std::normal_distribution<double> g;
    VectorXcd p(3);
    for (int i = 0; i < 3; ++i) p(i) = {g(rng), g(rng)};
    CHECK(jet_identity_check(p, 2, std::vector<double>{1.0, 2.0, 0.5}) < 1e-12);
}

TEST_CASE("weighted power sums vanish only at zero") {
    Rng rng(6);
    for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = solve_weighted_power_system(random_weights(rng, n));
            REQUIRE(s.size() == 1);
            CHECK(s.points[0].norm() == 0.0);
            CHECK(s.multiplicities[0] == std::vector<int>{1, 1, 2, 6}[n]);
        }
}

TEST_CASE("univariate helpers") {
    // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
    auto roots = polynomial_roots({6.0, -7.0, 0.0, 1.0, 0.0});
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    REQUIRE(roots.size() == 3);
    CHECK(std::abs(roots[0] - Complex(-3.0)) < 1e-12);
    CHECK(std::abs(roots[1] - Complex(1.0)) < 1e-12);
    CHECK(std::abs(roots[2] - Complex(2.0)) < 1e-12);

    const std::vector<Complex> z{1.0, 2.0, 4.0};
    CHECK(std::abs(vandermonde(z) - Complex(1.0 * 3.0 * 2.0)) < 1e-14);

    VectorXcd u(2);
    u << Complex(0.0, 2.0), 1.0;
    const auto n = normalize_projective(u);
    CHECK(std::abs(n.norm() - 1.0) < 1e-15);
    CHECK(std::abs(n(0).imag()) < 1e-15);
    CHECK(n(0).real() > 0);
    CHECK(projective_distance(u, n) < 1e-15);
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS(count_projective_intersections(std::vector<double>{1.0, -1.0, 1.0}), InputError);
    CHECK_THROWS_AS(count_tangency_lines(5, std::vector<double>(5, 1.0)), InputError);
}
