#pragma once

// Expected dimensions of moduli spaces of punctured holomorphic spheres,
// puncture-count bounds under tangency constraints, and the Maslov
// distribution bookkeeping for planes bounding a flat Lagrangian torus.

#include <string>
#include <vector>

#include "lagcap/half_integer.hpp"

namespace lagcap {

enum class PunctureSign { positive, negative };

struct PunctureSpec {
    PunctureSign sign = PunctureSign::positive;
    // CZ of the asymptotic orbit or Morse-Bott family (obtain it from RS with bott_cz)
    HalfInteger index;
    int bott_dim = 0;
};

struct ModuliProblem {
    int n = 0;                       // half-dimension of the ambient manifold
    std::vector<PunctureSpec> punctures;
    int c1 = 0;                      // c_1(A); the formula uses 2 c_1(A)
    int marked_points = 0;
    int tangency_order = 0;          // 0: no tangency constraint
    bool point_constraint = false;
    int node_count = 0;              // m(T) for broken/nodal configurations

    int positive_punctures() const;
    int negative_punctures() const;
    /// Throws InputError on negative counts, tangency without a point
    /// constraint, or a non-integral Morse index.
    void validate() const;
};

struct DimensionTerm {
    std::string label;
    HalfInteger value;
};

struct DimensionExpansion {
    std::vector<DimensionTerm> terms;
    int total = 0;
};

/// Term-by-term evaluation:
///   (n-3)(2 - p+ - p-) + 2c_1 + sum_pos (CZ + dim) - sum_neg CZ
///   - (2n-2) [point] - 2l [tangency] + 2m [marked] - 2m(T) [nodes].
/// The total must be an integer; otherwise InconsistencyError.
DimensionExpansion expand_dimension(const ModuliProblem& problem);

int dim_punctured(const ModuliProblem& problem);

/// Degree-one spheres in CP^n through a point, tangent of order n-1 to a hypersurface.
ModuliProblem cpn_tangency_problem(int n);

/// Sphere in T*T^n with m positive punctures at Morse-Bott families of
/// dimension n-1 with CZ = -mu_i, plus the CP^n line class and tangency n-1.
ModuliProblem audin_problem(int n, const std::vector<int>& mu);

/// Broken planes asymptotic to a flat-torus family with CZ = -mu: (n-3) + mu.
/// Specific to Bott dimension n-1.
int dim_plane(int n, int mu);

/// Simple spheres tangent of order l need at least l+2 punctures.
int min_punctures_simple(int ell);

struct MulticoverWitness {
    int b = 0;          // branching order at the tangency point
    int d = 0;          // covering degree
    int k = 0;          // punctures of the underlying simple sphere
    int ell = 0;        // induced tangency order of the simple sphere
    int punctures = 0;  // (k-2)d + b + 1
};

/// Minimizer of (k-2)d + b + 1 over d >= b >= 1, l = ceil(n/b) - 1, k >= l+2.
MulticoverWitness multicover_minimizer(int n);
int multicover_puncture_bound(int n);

class MaslovDistribution {
public:
    /// Throws InputError unless every mu_i > 0 and sum mu_i = 2n + 2.
    MaslovDistribution(int n, std::vector<int> mu);

    int n() const { return n_; }
    int m() const { return static_cast<int>(mu_.size()); }
    const std::vector<int>& mu() const { return mu_; }

    bool operator==(const MaslovDistribution&) const = default;

private:
    int n_;
    std::vector<int> mu_;
};

/// All (m, mu) with positive (even, if requested) mu_i summing to 2n + 2,
/// m >= n + 1 and sum (mu_i + |2 - mu_i|) <= 2m. Each mu is sorted
/// non-increasingly; the list is ordered by (m, mu) lexicographically.
std::vector<MaslovDistribution> audin_distributions(int n, bool even_only);

/// Whether sum_i dim im(T ev_i) + dim im(T ev) >= m(n-1) can hold given
/// dim im(T ev) <= 2m - 2n - 2 and dim im(T ev_i) <= (2n - 4 + mu_i - |2 - mu_i|)/2.
bool evaluation_rank_inequality(int n, const MaslovDistribution& dist);

}  // namespace lagcap
