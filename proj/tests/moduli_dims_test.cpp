#include <algorithm>
#include <functional>

#include "doctest.h"
#include "lagcap/errors.hpp"
#include "lagcap/moduli_dims.hpp"

using namespace lagcap;

namespace {

// all multisets of positive integers summing to total, non-increasing
void compositions(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        compositions(total - p, p, cur, out);
        cur.pop_back();
    }
}

int brute_multicover_bound(int n) {
    int best = 1 << 30;
    for (int b = 1; b <= n + 2; ++b) {
        const int ell = (n + b - 1) / b - 1;
        for (int d = b; d <= n + 4; ++d) best = std::min(best, ell * d + b + 1);  // k = ell + 2
    }
    return best;
}

}  // namespace

TEST_CASE("the tangency problem in CP^n is rigid") {
    for (int n = 2; n <= 10; ++n) {
        const auto e = expand_dimension(cpn_tangency_problem(n));
        CHECK(e.total == 0);
        int sum = 0;
        for (const auto& t : e.terms) sum += t.value.to_int();
        CHECK(sum == e.total);
    }
}

TEST_CASE("dimension formula by hand") {
    // two positive punctures at Morse-Bott families in dimension 2n = 6
    ModuliProblem p;
    p.n = 3;
    p.punctures = {{PunctureSign::positive, HalfInteger(-2), 2}, {PunctureSign::negative, HalfInteger(1), 0}};
    p.c1 = 1;
    p.marked_points = 2;
    // (n-3)(2-2) + 2 + (-2+2) - 1 + 2*2 = 5
    CHECK(dim_punctured(p) == 5);
    p.node_count = 1;
    CHECK(dim_punctured(p) == 3);
}

TEST_CASE("non-integral totals are inconsistent") {
    ModuliProblem p;
    p.n = 2;
    p.punctures = {{PunctureSign::positive, HalfInteger::from_twice(1), 1}};
    CHECK_THROWS_AS(dim_punctured(p), InconsistencyError);
    p.punctures[0].bott_dim = 0;
    CHECK_THROWS_AS(dim_punctured(p), InputError);
}

TEST_CASE("invalid problems") {
    ModuliProblem p;
    p.n = 2;
    p.tangency_order = 1;
    CHECK_THROWS_AS(p.validate(), InputError);
    p.point_constraint = true;
    CHECK_NOTHROW(p.validate());
    p.marked_points = -1;
    CHECK_THROWS_AS(p.validate(), InputError);
}

TEST_CASE("Audin problems have dimension 2m - 2n - 2") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& d : audin_distributions(n, false)) CHECK(dim_punctured(audin_problem(n, d.mu())) == 2 * d.m() - 2 * n - 2);
    }
}

TEST_CASE("dim_plane") {
    CHECK(dim_plane(4, 2) == 3);
    CHECK(dim_plane(2, 2) == 1);
}

TEST_CASE("audin distributions agree with a brute-force filter") {
    for (int n = 1; n <= 7; ++n) {
        for (bool even : {false, true}) {
            std::vector<std::vector<int>> all;
            std::vector<int> cur;
            compositions(2 * n + 2, 2 * n + 2, cur, all);
            std::vector<std::vector<int>> expected;
            for (const auto& mu : all) {
                const int m = static_cast<int>(mu.size());
                if (m < n + 1) continue;
                if (even && std::any_of(mu.begin(), mu.end(), [](int x) { return x % 2; })) continue;
                int s = 0;
                for (int x : mu) s += x + std::abs(2 - x);
                if (s <= 2 * m) expected.push_back(mu);
            }
            std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
            std::vector<std::vector<int>> got;
            for (const auto& d : audin_distributions(n, even)) got.push_back(d.mu());
            CAPTURE(n);
            CAPTURE(even);
            CHECK(got == expected);
        }
        const auto even = audin_distributions(n, true);
        REQUIRE(even.size() == 1);
        CHECK(even[0].mu() == std::vector<int>(n + 1, 2));
    }
}

TEST_CASE("multicover bound") {
    for (int n = 1; n <= 12; ++n) {
        CHECK(multicover_puncture_bound(n) == brute_multicover_bound(n));
        CHECK(multicover_puncture_bound(n) == n + 1);
        const auto w = multicover_minimizer(n);
        CHECK(w.punctures == (w.k - 2) * w.d + w.b + 1);
        CHECK(w.k >= w.ell + 2);
    }
    CHECK(min_punctures_simple(3) == 5);
}

TEST_CASE("maslov distributions validate their sum") {
    CHECK_THROWS_AS(MaslovDistribution(2, {2, 2}), InputError);
    CHECK_THROWS_AS(MaslovDistribution(2, {8, -2}), InputError);
    CHECK_NOTHROW(MaslovDistribution(2, {2, 2, 2}));
}

TEST_CASE("evaluation rank inequality holds for the even distribution") {
    for (int n = 1; n <= 8; ++n) {
        const MaslovDistribution d(n, std::vector<int>(n + 1, 2));
        CHECK(evaluation_rank_inequality(n, d));
    }
}
