#pragma once

// Root counts for the weighted power-sum systems h_k(z) = sum_i a_i z_i^k.
// Elimination: the linear equation removes one coordinate, a random unitary
// change of coordinates puts the rest in general position, and for three
// unknowns a Sylvester resultant reduces to one variable. Roots of the final
// univariate polynomial come from companion-matrix eigenvalues and are then
// Newton-polished on the full homogeneous system.

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lagcap/multipoly.hpp"

namespace lagcap {

struct SolutionSet {
    std::vector<Eigen::VectorXcd> points;  // unit norm, first nonzero coordinate real positive
    std::vector<double> residuals;         // max_k |h_k(point)|
    std::vector<double> jacobian_min_sv;
    std::vector<int> multiplicities;

    std::size_t size() const { return points.size(); }
};

struct SolverOptions {
    double tau_res = 1e-10;
    double tau_sep = 1e-6;
    double tau_trans = 1e-6;
    std::uint64_t seed = 20'240'101;  // coordinate change; results do not depend on it
    int max_attempts = 8;
};

/// All solutions of h_1 = ... = h_N = 0 in CP^N, N = a.size() - 1, 1 <= N <= 3.
/// No count is asserted here; points closer than tau_sep are merged with multiplicity.
SolutionSet solve_projective_power_system(std::span<const double> a, const SolverOptions& opt = {});

/// sum a_i z_i^k = 0 for k = 1..n in C^n; asserts that 0 is the only solution
/// and throws VerificationFailure with the offending direction otherwise. The
/// returned origin carries multiplicity n!.
SolutionSet solve_weighted_power_system(std::span<const double> a, const SolverOptions& opt = {});

/// n homogeneous equations in CP^n (a has n+1 entries, 2 <= n <= 3); asserts n! transverse points.
SolutionSet count_projective_intersections(std::span<const double> a, const SolverOptions& opt = {});

/// Lines f_p(z) = (p_1 z, ..., p_n z) with h_1(p) = ... = h_{n-1}(p) = 0, 2 <= n <= 4;
/// asserts (n-1)! transverse points in CP^{n-1}.
SolutionSet count_tangency_lines(int n, std::span<const double> a, const SolverOptions& opt = {});

/// |(h o f_p)^(k)(0) - k! h_k(p)| with h = h_1 + ... + h_{n-1}, computed by
/// polynomial composition.
double jet_identity_check(const Eigen::VectorXcd& p, int k, std::span<const double> a);

/// prod_{i<j} (z_j - z_i)
Complex vandermonde(std::span<const Complex> z);

/// Unit norm with the first coordinate of modulus > tol made real positive.
Eigen::VectorXcd normalize_projective(const Eigen::VectorXcd& z, double tol = 1e-8);

/// Distance between the projective classes [u] and [v] (sin of the Fubini-Study angle).
double projective_distance(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

/// Roots of sum_k c_k x^k via the companion matrix; trailing zero leading
/// coefficients are dropped.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs);

}  // namespace lagcap
