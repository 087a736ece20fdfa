#include "lagcap/chekanov.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "lagcap/errors.hpp"

namespace lagcap {

std::strong_ordering RelClass::operator<=>(const RelClass& o) const {
    if (auto c = b <=> o.b; c != 0) return c;
    if (auto c = a_gamma <=> o.a_gamma; c != 0) return c;
    return a_tau <=> o.a_tau;
}

std::string to_symbolic(const RelClass& c) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](int k, const char* name) {
        if (k == 0) return;
        const int m = std::abs(k);
        if (first) {
            if (k < 0) os << "−";
        } else {
            os << (k < 0 ? " − " : " + ");
        }
        if (m != 1) os << m;
        os << name;
        first = false;
    };
    term(c.b, "S₀");
    term(c.a_gamma, "D_Γ");
    term(c.a_tau, "D_τ");
    return first ? "0" : os.str();
}

std::string to_string(const RelClass& c) {
    return "(" + std::to_string(c.a_gamma) + ", " + std::to_string(c.a_tau) + ", " + std::to_string(c.b) + ")";
}

std::array<int, 4> intersection_row(const RelClass& c) {
    return {c.b, -c.a_tau + c.b, c.a_tau + c.b, c.a_gamma + 2 * c.b};
}

int maslov(const RelClass& c) { return 2 * c.a_gamma + 6 * c.b; }

std::vector<RelClass> enumerate_classes(int mu_target) {
    if (mu_target < 0 || mu_target % 2 != 0) throw InputError("Maslov target must be even and nonnegative");
    // Q.A >= 0 with 2a + 6b = mu gives b <= mu/2; S_1, S_2 give |a_tau| <= b
    std::vector<RelClass> out;
    for (int b = 0; b <= mu_target / 2; ++b) {
        const int a_gamma = (mu_target - 6 * b) / 2;
        for (int a_tau = -b; a_tau <= b; ++a_tau) {
            const RelClass c{a_gamma, a_tau, b};
            const auto row = intersection_row(c);
            if (maslov(c) == mu_target && std::all_of(row.begin(), row.end(), [](int v) { return v >= 0; }))
                out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<RelClass>> splitting_configurations() {
    std::vector<RelClass> meets_s0;
    std::vector<RelClass> avoids_s0;
    for (int mu : {2, 4}) {
        for (const RelClass& c : enumerate_classes(mu)) {
            if (c.b == 1) meets_s0.push_back(c);
            if (c.b == 0) avoids_s0.push_back(c);
        }
    }
    // the S_0-avoiding classes are exactly D_Gamma and 2 D_Gamma
    if (avoids_s0 != std::vector<RelClass>{RelClass::d_gamma(), RelClass::d_gamma() * 2})
        throw VerificationFailure("classes disjoint from S_0 are not {D_Gamma, 2 D_Gamma}");

    std::vector<std::vector<RelClass>> out;
    std::vector<RelClass> rest;
    // rest is built non-increasing in Maslov number so each multiset appears once
    std::function<void(const RelClass&, int, int, RelClass)> extend = [&](const RelClass& c0, int budget, int cap,
                                                                          RelClass sum) {
        if (budget == 0) {
            if (sum == RelClass::s0()) {
                std::vector<RelClass> tuple{c0};
                tuple.insert(tuple.end(), rest.begin(), rest.end());
                out.push_back(tuple);
            }
            return;
        }
        for (const RelClass& c : avoids_s0) {
            const int mu = maslov(c);
            if (mu > budget || mu > cap) continue;
            rest.push_back(c);
            extend(c0, budget - mu, mu, sum + c);
            rest.pop_back();
        }
    };
    for (const RelClass& c0 : meets_s0) extend(c0, 6 - maslov(c0), 6, c0);

    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });
    return out;
}

H1Class boundary_class(const RelClass& c) { return {c.a_gamma, c.a_tau}; }

void AsymptoticTree::validate() const {
    const int n = node_count();
    if (n == 0) throw ConstraintViolation("tree has no nodes");
    if (root < 0 || root >= n) throw ConstraintViolation("root index out of range");
    if (!totals.empty() && static_cast<int>(totals.size()) != n)
        throw ConstraintViolation("totals must be empty or given for every node");
    if (static_cast<int>(edges.size()) != n - 1)
        throw ConstraintViolation("a tree on " + std::to_string(n) + " nodes needs " + std::to_string(n - 1) +
                                  " edges");

    std::vector<std::vector<bool>> used(n);
    for (int v = 0; v < n; ++v) used[v].assign(punctures[v].size(), false);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };

    for (std::size_t e = 0; e < edges.size(); ++e) {
        const TreeEdge& ed = edges[e];
        const std::string where = "edge " + std::to_string(e);
        for (auto [node, p] : {std::pair{ed.node_a, ed.puncture_a}, std::pair{ed.node_b, ed.puncture_b}}) {
            if (node < 0 || node >= n) throw ConstraintViolation(where + ": node index out of range");
            if (p < 0 || p >= static_cast<int>(punctures[node].size()))
                throw ConstraintViolation(where + ": puncture index out of range at node " + std::to_string(node));
            if (used[node][p])
                throw ConstraintViolation(where + ": puncture " + std::to_string(p) + " of node " +
                                          std::to_string(node) + " is used twice");
            used[node][p] = true;
        }
        const H1Class& ca = punctures[ed.node_a][ed.puncture_a];
        const H1Class& cb = punctures[ed.node_b][ed.puncture_b];
        if (ca != cb && !(ca[0] == -cb[0] && ca[1] == -cb[1]))
            throw ConstraintViolation(where + ": matched punctures carry different classes");
        const int ra = find(ed.node_a);
        const int rb = find(ed.node_b);
        if (ra == rb) throw ConstraintViolation(where + " closes a cycle");
        parent[ra] = rb;
    }

    for (int v = 0; v < n; ++v) {
        const std::string where = "node " + std::to_string(v);
        if (punctures[v].empty()) throw ConstraintViolation(where + " has no punctures");
        if (!totals.empty()) {
            H1Class sum{0, 0};
            for (const H1Class& h : punctures[v]) {
                sum[0] += h[0];
                sum[1] += h[1];
            }
            if (sum != totals[v]) throw ConstraintViolation(where + ": puncture classes do not add up to its total");
        }
        const auto off = std::count_if(punctures[v].begin(), punctures[v].end(),
                                       [](const H1Class& h) { return !is_gamma_multiple(h); });
        if (off == 1)
            throw ConstraintViolation(where + " has exactly one puncture that is not a multiple of [Gamma]");
    }
}

PropagationResult propagate_tree_detailed(const AsymptoticTree& t) {
    t.validate();
    const int n = t.node_count();
    PropagationResult result;

    // for each node, the edge incident to each puncture (-1 = free end)
    std::vector<std::vector<int>> edge_at(n);
    for (int v = 0; v < n; ++v) edge_at[v].assign(t.punctures[v].size(), -1);
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        edge_at[t.edges[e].node_a][t.edges[e].puncture_a] = static_cast<int>(e);
        edge_at[t.edges[e].node_b][t.edges[e].puncture_b] = static_cast<int>(e);
    }
    std::vector<bool> removed(n, false);
    std::vector<bool> certified(t.edges.size(), false);

    // a puncture is known to be a Gamma multiple if its edge is certified, or it is a free end with such a class
    auto known = [&](int v, int p) {
        const int e = edge_at[v][p];
        return e >= 0 ? static_cast<bool>(certified[e]) : is_gamma_multiple(t.punctures[v][p]);
    };

    for (int remaining = n; remaining > 0; --remaining) {
        int leaf = -1;
        int open_edge = -1;
        for (int v = 0; v < n && leaf < 0; ++v) {
            if (removed[v]) continue;
            int open = 0;
            int last = -1;
            for (int e : edge_at[v])
                if (e >= 0 && !certified[e]) {
                    ++open;
                    last = e;
                }
            if (open > 1) continue;
            bool others_known = true;
            for (std::size_t p = 0; p < t.punctures[v].size(); ++p)
                if (edge_at[v][p] != last || last < 0) others_known = others_known && known(v, static_cast<int>(p));
            if (!others_known) continue;
            leaf = v;
            open_edge = last;
        }
        if (leaf < 0) return result;
        // by the dichotomy the open puncture cannot be the only one off the Gamma line
        if (open_edge >= 0) certified[open_edge] = true;
        removed[leaf] = true;
        result.steps.push_back({leaf, open_edge});
    }
    result.certified = std::all_of(certified.begin(), certified.end(), [](bool b) { return b; });
    return result;
}

bool propagate_tree(const AsymptoticTree& t) { return propagate_tree_detailed(t).certified; }

}  // namespace lagcap
