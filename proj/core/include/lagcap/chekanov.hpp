#pragma once

// Relative classes of the Chekanov torus L in CP^2, in the basis
// (D_Gamma, D_tau, S_0) of H_2(CP^2, L), and the tree argument showing that
// all asymptotic geodesics of a neck-stretched line are multiples of [Gamma].

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace lagcap {

struct RelClass {
    int a_gamma = 0;
    int a_tau = 0;
    int b = 0;

    RelClass operator+(const RelClass& o) const { return {a_gamma + o.a_gamma, a_tau + o.a_tau, b + o.b}; }
    RelClass operator*(int k) const { return {k * a_gamma, k * a_tau, k * b}; }
    bool operator==(const RelClass&) const = default;
    /// lexicographic on (b, a_gamma, a_tau)
    std::strong_ordering operator<=>(const RelClass& o) const;

    static RelClass d_gamma() { return {1, 0, 0}; }
    static RelClass d_tau() { return {0, 1, 0}; }
    static RelClass s0() { return {0, 0, 1}; }
};

/// e.g. "S₀ − 2D_Γ + D_τ"
std::string to_symbolic(const RelClass& c);
/// "(a_gamma, a_tau, b)"
std::string to_string(const RelClass& c);

/// (S_0.A, S_1.A, S_2.A, Q.A) = (b, -a_tau + b, a_tau + b, a_gamma + 2b)
std::array<int, 4> intersection_row(const RelClass& c);

/// 2 a_gamma + 6 b
int maslov(const RelClass& c);

/// Classes with Maslov number mu and all four intersections nonnegative.
/// mu must be even and nonnegative; sorted by (b, a_gamma, a_tau).
std::vector<RelClass> enumerate_classes(int mu_target);

/// Splittings (C_0, C_1, ...) of S_0 into classes of Maslov number 2 or 4 with
/// C_0 the unique component meeting S_0; the remaining components are sorted.
std::vector<std::vector<RelClass>> splitting_configurations();

/// Boundary in H_1(L) in the basis ([Gamma], [tau]).
using H1Class = std::array<int, 2>;
H1Class boundary_class(const RelClass& c);

inline bool is_gamma_multiple(const H1Class& h) { return h[1] == 0; }

struct TreeEdge {
    int node_a = 0;
    int puncture_a = 0;
    int node_b = 0;
    int puncture_b = 0;
};

// Nodes are components of a broken curve; an edge joins two punctures asymptotic
// to a common geodesic. Punctures not used by any edge are free ends.
struct AsymptoticTree {
    std::vector<std::vector<H1Class>> punctures;  // per node
    std::vector<H1Class> totals;                  // optional per-node boundary class; empty = unchecked
    std::vector<TreeEdge> edges;
    int root = 0;

    int node_count() const { return static_cast<int>(punctures.size()); }

    /// Tree shape, index ranges, matched classes (equal up to sign), node
    /// sums, and the dichotomy: no node has exactly one puncture off the
    /// [Gamma] line. Throws ConstraintViolation naming the node.
    void validate() const;
};

struct PropagationStep {
    int node = 0;       // leaf removed at this step
    int certified = 0;  // edge index certified through it, -1 for the last node
};

struct PropagationResult {
    bool certified = false;
    std::vector<PropagationStep> steps;
};

/// Leaf-pruning induction: a leaf whose other punctures are all multiples of
/// [Gamma] forces the same on its remaining edge; the leaf is removed and the
/// edge certified. Returns true iff every edge and free puncture ends up certified.
PropagationResult propagate_tree_detailed(const AsymptoticTree& t);
bool propagate_tree(const AsymptoticTree& t);

}  // namespace lagcap
