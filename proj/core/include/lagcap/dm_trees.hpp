#pragma once

// k-labelled trees, stability and stabilization, strata of the
// Deligne-Mumford space of genus-zero curves, and stable decompositions.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace lagcap {

struct LabelledTree {
    int k = 0;
    std::vector<std::vector<int>> labels;  // labels[alpha], a partition of {1..k}
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return static_cast<int>(labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Connected, acyclic, e = |T| - 1, every label used exactly once.
    /// Throws ConstraintViolation.
    void validate() const;

    std::vector<std::vector<int>> adjacency() const;
    /// n_alpha = #labels + #neighbours
    std::vector<int> special_counts() const;

    bool operator==(const LabelledTree&) const = default;

    static LabelledTree single(int k);
};

bool is_stable(const LabelledTree& t);

/// Deletes unstable vertices until none is left: a leaf with at most one
/// label hands the label to its neighbour, an unlabelled vertex of degree two
/// is replaced by an edge between its neighbours. Output is canonicalized.
LabelledTree stabilize(const LabelledTree& t);

int stratum_dim(const LabelledTree& t);
inline int stratum_codim(const LabelledTree& t) { return t.edge_count(); }

/// Canonical string of the isomorphism class (centroid-rooted, children sorted).
std::string canonical_form(const LabelledTree& t);

/// Same class with vertices renumbered in canonical order and edges sorted.
LabelledTree canonicalize(const LabelledTree& t);

/// All stable k-labelled trees up to isomorphism, 3 <= k <= 7, sorted by
/// (|T|, canonical form).
std::vector<LabelledTree> enumerate_stable_trees(int k);

/// Splits {A, A^c} of the labels cut by the edges, each side with >= 2 labels,
/// represented by the side not containing k.
std::vector<std::vector<int>> label_splits(const LabelledTree& t);

struct StableDecomposition {
    std::vector<std::vector<int>> parts;  // parts[0] = {0}, ordered by minima

    bool operator==(const StableDecomposition&) const = default;
    auto operator<=>(const StableDecomposition&) const = default;
};

std::vector<StableDecomposition> stable_decompositions(int k);

/// Partition of the labels other than `label` cut out by the special points of
/// the vertex carrying `label`; parts ordered by minima with `label` first.
std::vector<std::vector<int>> induced_decomposition(const LabelledTree& t, int label);

struct NodalCurve {
    LabelledTree tree;
    std::vector<std::map<int, Eigen::Vector3d>> marked;  // per vertex: label -> z_i
    std::map<std::pair<int, int>, Eigen::Vector3d> node_points;  // (alpha, beta) -> z_{alpha beta} on alpha
};

/// Tree valid, points on S^2, marked points exactly the vertex labels, one node
/// point per oriented edge, and special points pairwise distinct on each vertex.
bool validate_nodal(const NodalCurve& c, double tol = 1e-9);

}  // namespace lagcap
