#include "lagcap/dm_trees.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "lagcap/errors.hpp"

namespace lagcap {

void LabelledTree::validate() const {
    const int n = vertex_count();
    if (n == 0) throw ConstraintViolation("tree has no vertices");
    if (edge_count() != n - 1)
        throw ConstraintViolation("a tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                                  " edges, got " + std::to_string(edge_count()));
    std::vector<int> seen(k + 1, 0);
    for (const auto& ls : labels) {
        for (int l : ls) {
            if (l < 1 || l > k) throw ConstraintViolation("label " + std::to_string(l) + " outside 1.." + std::to_string(k));
            if (seen[l]++) throw ConstraintViolation("label " + std::to_string(l) + " used twice");
        }
    }
    for (int l = 1; l <= k; ++l)
        if (!seen[l]) throw ConstraintViolation("label " + std::to_string(l) + " unused");

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw ConstraintViolation("bad edge endpoint");
        const int ra = find(a);
        const int rb = find(b);
        if (ra == rb) throw ConstraintViolation("edges contain a cycle");
        parent[ra] = rb;
    }
}

std::vector<std::vector<int>> LabelledTree::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::vector<int> LabelledTree::special_counts() const {
    std::vector<int> n(vertex_count());
    const auto adj = adjacency();
    for (int v = 0; v < vertex_count(); ++v) n[v] = static_cast<int>(labels[v].size() + adj[v].size());
    return n;
}

LabelledTree LabelledTree::single(int k) {
    LabelledTree t;
    t.k = k;
    t.labels.resize(1);
    for (int l = 1; l <= k; ++l) t.labels[0].push_back(l);
    return t;
}

bool is_stable(const LabelledTree& t) {
    t.validate();
    const auto n = t.special_counts();
    return std::all_of(n.begin(), n.end(), [](int v) { return v >= 3; });
}

namespace {

std::string rooted_form(const LabelledTree& t, const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<int> ls = t.labels[v];
    std::sort(ls.begin(), ls.end());
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(rooted_form(t, adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << ls[i];
    for (const auto& s : kids) os << s;
    os << ")";
    return os.str();
}

std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> size(n, 1);
    std::vector<int> order;
    std::vector<int> parent(n, -1);
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : adj[order[i]])
            if (w != parent[order[i]]) {
                parent[w] = order[i];
                order.push_back(w);
            }
    for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];
        for (int w : adj[v])
            if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
        if (2 * heaviest <= n) out.push_back(v);
    }
    return out;
}

int canonical_root(const LabelledTree& t, const std::vector<std::vector<int>>& adj, std::string* form) {
    int best = -1;
    std::string best_form;
    for (int c : centroids(adj)) {
        std::string f = rooted_form(t, adj, c, -1);
        if (best < 0 || f < best_form) {
            best = c;
            best_form = std::move(f);
        }
    }
    if (form) *form = best_form;
    return best;
}

}  // namespace

std::string canonical_form(const LabelledTree& t) {
    t.validate();
    std::string f;
    canonical_root(t, t.adjacency(), &f);
    return f;
}

LabelledTree canonicalize(const LabelledTree& t) {
    t.validate();
    const auto adj = t.adjacency();
    const int root = canonical_root(t, adj, nullptr);
    std::vector<int> order{root};
    std::vector<int> parent(t.vertex_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        std::vector<std::pair<std::string, int>> kids;
        for (int w : adj[v])
            if (w != parent[v]) kids.emplace_back(rooted_form(t, adj, w, v), w);
        std::sort(kids.begin(), kids.end());
        for (auto& [f, w] : kids) {
            parent[w] = v;
            order.push_back(w);
        }
    }
    std::vector<int> index(t.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
    LabelledTree out;
    out.k = t.k;
    out.labels.resize(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) {
        out.labels[index[v]] = t.labels[v];
        std::sort(out.labels[index[v]].begin(), out.labels[index[v]].end());
    }
    for (auto [a, b] : t.edges) out.edges.emplace_back(std::min(index[a], index[b]), std::max(index[a], index[b]));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

LabelledTree stabilize(const LabelledTree& t) {
    t.validate();
    if (t.k < 3) throw InputError("stabilization needs k >= 3 labels");

    std::vector<std::vector<int>> labels = t.labels;
    std::vector<std::set<int>> adj(t.vertex_count());
    for (auto [a, b] : t.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::vector<bool> alive(t.vertex_count(), true);
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < t.vertex_count(); ++v) {
            if (!alive[v]) continue;
            const std::size_t deg = adj[v].size();
            if (labels[v].size() + deg >= 3) continue;
            if (deg == 1) {
                const int w = *adj[v].begin();
                labels[w].insert(labels[w].end(), labels[v].begin(), labels[v].end());
                adj[w].erase(v);
            } else if (deg == 2) {
                // no labels here, since n_alpha < 3
                const int u = *adj[v].begin();
                const int w = *adj[v].rbegin();
                adj[u].erase(v);
                adj[w].erase(v);
                adj[u].insert(w);
                adj[w].insert(u);
            } else {
                continue;  // a lone vertex holds all k >= 3 labels
            }
            labels[v].clear();
            adj[v].clear();
            alive[v] = false;
            changed = true;
        }
    }

    std::vector<int> index(t.vertex_count(), -1);
    LabelledTree out;
    out.k = t.k;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (!alive[v]) continue;
        index[v] = out.vertex_count();
        out.labels.push_back(labels[v]);
    }
    for (int v = 0; v < t.vertex_count(); ++v)
        for (int w : adj[v])
            if (alive[v] && v < w) out.edges.emplace_back(index[v], index[w]);
    return canonicalize(out);
}

int stratum_dim(const LabelledTree& t) {
    if (!is_stable(t)) throw PreconditionError("stratum dimension needs a stable tree");
    return t.k - 3 - t.edge_count();
}

std::vector<std::vector<int>> label_splits(const LabelledTree& t) {
    t.validate();
    const auto adj = t.adjacency();
    std::vector<std::vector<int>> out;
    for (auto [a, b] : t.edges) {
        // labels on the b side of edge (a, b)
        std::vector<int> side;
        std::vector<int> stack{b};
        std::vector<bool> seen(t.vertex_count(), false);
        seen[a] = seen[b] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            side.insert(side.end(), t.labels[v].begin(), t.labels[v].end());
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(side.begin(), side.end());
        if (std::binary_search(side.begin(), side.end(), t.k)) {
            std::vector<int> other;
            for (int l = 1; l <= t.k; ++l)
                if (!std::binary_search(side.begin(), side.end(), l)) other.push_back(l);
            side = std::move(other);
        }
        if (side.size() >= 2 && static_cast<int>(side.size()) <= t.k - 2) out.push_back(side);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// The tree of a laminar family of clusters avoiding label k: one vertex for the
// whole set and one per cluster, each hanging below its smallest strict superset.
LabelledTree tree_from_clusters(int k, const std::vector<unsigned>& clusters) {
    const unsigned full = (1u << k) - 1u;
    std::vector<unsigned> sets{full};
    sets.insert(sets.end(), clusters.begin(), clusters.end());
    LabelledTree t;
    t.k = k;
    t.labels.resize(sets.size());
    std::vector<int> parent(sets.size(), -1);
    for (std::size_t i = 1; i < sets.size(); ++i) {
        int best = 0;
        for (std::size_t j = 1; j < sets.size(); ++j)
            if (j != i && (sets[i] & sets[j]) == sets[i] && std::popcount(sets[j]) < std::popcount(sets[best]))
                best = static_cast<int>(j);
        parent[i] = best;
        t.edges.emplace_back(best, static_cast<int>(i));
    }
    for (int l = 1; l <= k; ++l) {
        const unsigned bit = 1u << (l - 1);
        int owner = 0;
        for (std::size_t j = 1; j < sets.size(); ++j)
            if ((sets[j] & bit) && std::popcount(sets[j]) < std::popcount(sets[owner])) owner = static_cast<int>(j);
        t.labels[owner].push_back(l);
    }
    return t;
}

}  // namespace

std::vector<LabelledTree> enumerate_stable_trees(int k) {
    if (k < 3 || k > 7) throw InputError("stable tree enumeration supports 3 <= k <= 7");
    // clusters: subsets of {1..k-1} with 2 <= size <= k-2
    std::vector<unsigned> candidates;
    for (unsigned s = 1; s < (1u << (k - 1)); ++s) {
        const int c = std::popcount(s);
        if (c >= 2 && c <= k - 2) candidates.push_back(s);
    }
    auto laminar = [](unsigned x, unsigned y) { return (x & y) == 0 || (x & y) == x || (x & y) == y; };

    std::vector<LabelledTree> out;
    std::vector<unsigned> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        LabelledTree t = canonicalize(tree_from_clusters(k, chosen));
        out.push_back(std::move(t));
        for (std::size_t i = from; i < candidates.size(); ++i) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](unsigned c) { return laminar(c, candidates[i]); }))
                continue;
            chosen.push_back(candidates[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);

    std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keys;
    for (std::size_t i = 0; i < out.size(); ++i) keys.push_back({{out[i].vertex_count(), canonical_form(out[i])}, i});
    std::sort(keys.begin(), keys.end());
    std::vector<LabelledTree> sorted;
    for (const auto& [key, i] : keys) sorted.push_back(out[i]);
    return sorted;
}

std::vector<StableDecomposition> stable_decompositions(int k) {
    if (k < 2) throw InputError("stable decompositions need k >= 2");
    std::vector<StableDecomposition> out;
    // restricted growth strings on {1..k}
    std::vector<int> block(k, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == k) {
            if (used + 1 < 3) return;
            StableDecomposition d;
            d.parts.assign(used + 1, {});
            d.parts[0] = {0};
            for (int j = 0; j < k; ++j) d.parts[block[j] + 1].push_back(j + 1);
            out.push_back(std::move(d));
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> induced_decomposition(const LabelledTree& t, int label) {
    t.validate();
    int root = -1;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (std::find(t.labels[v].begin(), t.labels[v].end(), label) != t.labels[v].end()) root = v;
    if (root < 0) throw InputError("label " + std::to_string(label) + " not in tree");
    const auto adj = t.adjacency();
    std::vector<std::vector<int>> parts{{label}};
    for (int l : t.labels[root])
        if (l != label) parts.push_back({l});
    for (int w : adj[root]) {
        std::vector<int> part;
        std::vector<int> stack{w};
        std::vector<bool> seen(t.vertex_count(), false);
        seen[root] = seen[w] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            part.insert(part.end(), t.labels[v].begin(), t.labels[v].end());
            for (int x : adj[v])
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(part);
    }
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin() + 1, parts.end(), [](const auto& x, const auto& y) {
        const int mx = x.empty() ? 0 : x.front();
        const int my = y.empty() ? 0 : y.front();
        return mx < my;
    });
    return parts;
}

bool validate_nodal(const NodalCurve& c, double tol) {
    try {
        c.tree.validate();
    } catch (const ConstraintViolation&) {
        return false;
    }
    const int n = c.tree.vertex_count();
    if (static_cast<int>(c.marked.size()) != n) return false;
    auto on_sphere = [&](const Eigen::Vector3d& p) { return std::abs(p.norm() - 1.0) <= tol; };

    std::set<std::pair<int, int>> oriented;
    for (auto [a, b] : c.tree.edges) {
        oriented.insert({a, b});
        oriented.insert({b, a});
    }
    if (c.node_points.size() != oriented.size()) return false;
    for (const auto& [key, p] : c.node_points)
        if (!oriented.count(key) || !on_sphere(p)) return false;

    for (int v = 0; v < n; ++v) {
        std::vector<int> labels = c.tree.labels[v];
        std::sort(labels.begin(), labels.end());
        std::vector<int> keys;
        std::vector<Eigen::Vector3d> special;
        for (const auto& [l, p] : c.marked[v]) {
            keys.push_back(l);
            if (!on_sphere(p)) return false;
            special.push_back(p);
        }
        if (keys != labels) return false;
        for (const auto& [key, p] : c.node_points)
            if (key.first == v) special.push_back(p);
        for (std::size_t i = 0; i < special.size(); ++i)
            for (std::size_t j = i + 1; j < special.size(); ++j)
                if ((special[i] - special[j]).norm() <= tol) return false;
    }
    return true;
}

}  // namespace lagcap
