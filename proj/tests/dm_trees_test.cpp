#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "lagcap/dm_trees.hpp"
#include "lagcap/errors.hpp"
#include "support.hpp"

using namespace lagcap;
using test::Rng;

namespace {

LabelledTree tree(int k, std::vector<std::vector<int>> labels, std::vector<std::pair<int, int>> edges) {
    return {k, std::move(labels), std::move(edges)};
}

// label sets cut off by each edge, taken on the side without k, kept when both sides have >= 2 labels
std::set<std::vector<int>> splits_oracle(const LabelledTree& t) {
    std::set<std::vector<int>> out;
    for (std::size_t cut = 0; cut < t.edges.size(); ++cut) {
        std::vector<int> side;
        std::vector<bool> seen(t.vertex_count(), false);
        std::function<void(int)> visit = [&](int v) {
            seen[v] = true;
            side.insert(side.end(), t.labels[v].begin(), t.labels[v].end());
            for (std::size_t e = 0; e < t.edges.size(); ++e) {
                if (e == cut) continue;
                const auto [a, b] = t.edges[e];
                if (a == v && !seen[b]) visit(b);
                if (b == v && !seen[a]) visit(a);
            }
        };
        visit(t.edges[cut].first);
        if (std::find(side.begin(), side.end(), t.k) != side.end()) {
            std::vector<int> other;
            for (int l = 1; l <= t.k; ++l)
                if (std::find(side.begin(), side.end(), l) == side.end()) other.push_back(l);
            side = other;
        }
        std::sort(side.begin(), side.end());
        if (side.size() >= 2 && t.k - static_cast<int>(side.size()) >= 2) out.insert(side);
    }
    return out;
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) {
    std::set<std::vector<int>> out;
    for (auto s : v) {
        std::sort(s.begin(), s.end());
        out.insert(s);
    }
    return out;
}

}  // namespace

TEST_CASE("stable tree counts by number of vertices") {
    // strata of the moduli space of stable genus-zero curves with k marked points
    const std::vector<std::vector<int>> by_vertices{{1}, {1, 3}, {1, 10, 15}, {1, 25, 105, 105}, {1, 56, 490, 1260, 945}};
    for (int k = 3; k <= 7; ++k) {
        const auto trees = enumerate_stable_trees(k);
        std::vector<int> counts(k - 2, 0);
        for (const auto& t : trees) {
            CHECK(is_stable(t));
            CHECK(stratum_dim(t) == k - 3 - t.edge_count());
            ++counts[t.vertex_count() - 1];
        }
        CAPTURE(k);
        CHECK(counts == by_vertices[k - 3]);
    }
}

TEST_CASE("two-vertex classes") {
    for (int k = 4; k <= 7; ++k) {
        const auto trees = enumerate_stable_trees(k);
        const auto two = std::count_if(trees.begin(), trees.end(), [](const auto& t) { return t.vertex_count() == 2; });
        CHECK(two == (1 << (k - 1)) - k - 1);
    }
}

TEST_CASE("enumeration is sorted and free of duplicates") {
    const auto trees = enumerate_stable_trees(6);
    std::set<std::string> forms;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        forms.insert(canonical_form(trees[i]));
        if (i > 0) {
            const auto& a = trees[i - 1];
            const auto& b = trees[i];
            CHECK((a.vertex_count() < b.vertex_count() ||
                   (a.vertex_count() == b.vertex_count() && canonical_form(a) < canonical_form(b))));
        }
    }
    CHECK(forms.size() == trees.size());
}

TEST_CASE("stabilization keeps exactly the splits with two labels on each side") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = std::uniform_int_distribution<int>(3, 7)(rng);
        const auto t = test::random_tree(rng, k, 8);
        const auto s = stabilize(t);
        CHECK(is_stable(s));
        CHECK(stabilize(s) == s);
        CHECK(as_set(label_splits(s)) == splits_oracle(s));
        CHECK(splits_oracle(s) == splits_oracle(t));
    }
}

TEST_CASE("canonical form ignores vertex numbering") {
    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = test::random_tree(rng, 6, 6);
        std::vector<int> perm(t.vertex_count());
        for (int i = 0; i < t.vertex_count(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        LabelledTree u{t.k, std::vector<std::vector<int>>(t.vertex_count()), {}};
        for (int v = 0; v < t.vertex_count(); ++v) u.labels[perm[v]] = t.labels[v];
        for (const auto& [a, b] : t.edges) u.edges.emplace_back(perm[b], perm[a]);
        CHECK(canonical_form(u) == canonical_form(t));
        CHECK(canonicalize(u) == canonicalize(t));
    }
}

TEST_CASE("hand-built trees") {
    const auto t = tree(4, {{1, 2}, {3, 4}}, {{0, 1}});
    CHECK(is_stable(t));
    CHECK(stratum_dim(t) == 0);
    CHECK(stratum_codim(t) == 1);
    CHECK(label_splits(t) == std::vector<std::vector<int>>{{1, 2}});

    // a leaf with one label hands it over
    const auto leafy = tree(4, {{1, 2, 3}, {4}}, {{0, 1}});
    CHECK_FALSE(is_stable(leafy));
    CHECK(stabilize(leafy) == LabelledTree::single(4));
    CHECK_THROWS_AS(stratum_dim(leafy), PreconditionError);

    // an unlabelled vertex of degree two is contracted
    const auto path = tree(4, {{1, 2}, {}, {3, 4}}, {{0, 1}, {1, 2}});
    CHECK(canonical_form(stabilize(path)) == canonical_form(t));
}

TEST_CASE("tree validation") {
    CHECK_THROWS_AS(tree(3, {{1, 2}, {2, 3}}, {{0, 1}}).validate(), ConstraintViolation);
    CHECK_THROWS_AS(tree(3, {{1, 2}, {3}}, {}).validate(), ConstraintViolation);
    CHECK_THROWS_AS(tree(3, {{1}, {2}, {3}}, {{0, 1}, {1, 2}, {2, 0}}).validate(), ConstraintViolation);
    CHECK_THROWS_AS(enumerate_stable_trees(8), InputError);
}

TEST_CASE("stable decompositions") {
    // partitions of {1..k} into at least two blocks: Bell(k) - 1
    const std::vector<int> bell{1, 1, 2, 5, 15, 52, 203};
    for (int k = 2; k <= 6; ++k) {
        const auto ds = stable_decompositions(k);
        CHECK(static_cast<int>(ds.size()) == bell[k] - 1);
        CHECK(std::is_sorted(ds.begin(), ds.end()));
        for (const auto& d : ds) CHECK(d.parts[0] == std::vector<int>{0});
    }
}

TEST_CASE("induced decompositions") {
    const auto t = tree(5, {{1, 2}, {3}, {4, 5}}, {{0, 1}, {1, 2}});
    CHECK(induced_decomposition(t, 1) == std::vector<std::vector<int>>{{1}, {2}, {3, 4, 5}});
    CHECK(induced_decomposition(t, 3) == std::vector<std::vector<int>>{{3}, {1, 2}, {4, 5}});
}

TEST_CASE("nodal curves") {
    NodalCurve c;
    c.tree = tree(4, {{1, 2}, {3, 4}}, {{0, 1}});
    c.marked = {{{1, {1, 0, 0}}, {2, {0, 1, 0}}}, {{3, {1, 0, 0}}, {4, {0, 1, 0}}}};
    c.node_points = {{{0, 1}, {0, 0, 1}}, {{1, 0}, {0, 0, -1}}};
    CHECK(validate_nodal(c));
    auto clash = c;
    clash.node_points[{0, 1}] = {1, 0, 0};
    CHECK_FALSE(validate_nodal(clash));
    auto off_sphere = c;
    off_sphere.marked[0][1] = {2, 0, 0};
    CHECK_FALSE(validate_nodal(off_sphere));
    auto missing = c;
    missing.node_points.erase({1, 0});
    CHECK_FALSE(validate_nodal(missing));
}
