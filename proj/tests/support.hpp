#pragma once

// Shared generators for the unit tests.

#include <random>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "lagcap/dm_trees.hpp"
#include "lagcap/symplectic_index.hpp"

namespace lagcap::test {

using Rng = std::mt19937_64;

inline Matrix random_symmetric(Rng& rng, int dim, double scale) {
    std::normal_distribution<double> g(0.0, scale);
    Matrix s(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) s(i, j) = g(rng);
    return 0.5 * (s + s.transpose());
}

// t -> exp(J0 (t S1 + t^2 S2))
inline SymplecticPath random_path(Rng& rng, int n, int samples = 161) {
    const Matrix s1 = random_symmetric(rng, 2 * n, 1.2);
    const Matrix s2 = random_symmetric(rng, 2 * n, 1.2);
    const Matrix j0 = standard_j(n);
    return SymplecticPath::sample(n, [&](double t) -> Matrix { return (j0 * (t * s1 + t * t * s2)).exp(); }, samples);
}

inline SymplecticPath rotation_path(double theta, int samples = 129) {
    return SymplecticPath::sample(1, [&](double t) { return plane_rotation(1, 0, theta * t); }, samples);
}

inline LabelledTree random_tree(Rng& rng, int k, int max_vertices) {
    LabelledTree t;
    t.k = k;
    const int v = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    t.labels.resize(v);
    for (int i = 1; i < v; ++i) t.edges.emplace_back(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    for (int l = 1; l <= k; ++l) t.labels[std::uniform_int_distribution<int>(0, v - 1)(rng)].push_back(l);
    return t;
}

}  // namespace lagcap::test
