#include "lagcap/moduli_dims.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>

namespace lagcap {

int ModuliProblem::positive_punctures() const {
    return static_cast<int>(std::count_if(punctures.begin(), punctures.end(),
                                          [](const PunctureSpec& p) { return p.sign == PunctureSign::positive; }));
}

int ModuliProblem::negative_punctures() const {
    return static_cast<int>(punctures.size()) - positive_punctures();
}

void ModuliProblem::validate() const {
    if (n < 1) throw InputError("moduli problem: n must be positive");
    if (marked_points < 0 || tangency_order < 0 || node_count < 0)
        throw InputError("moduli problem: counts must be nonnegative");
    if (tangency_order > 0 && !point_constraint)
        throw InputError("moduli problem: a tangency constraint needs a point constraint");
    for (const PunctureSpec& p : punctures) {
        if (p.bott_dim < 0) throw InputError("moduli problem: Bott dimension must be nonnegative");
        if (p.bott_dim == 0 && !p.index.is_integer())
            throw InputError("moduli problem: a nondegenerate orbit needs an integral CZ index, got " +
                             p.index.str());
    }
}

DimensionExpansion expand_dimension(const ModuliProblem& problem) {
    problem.validate();
    DimensionExpansion out;
    const int p_pos = problem.positive_punctures();
    const int p_neg = problem.negative_punctures();
    out.terms.push_back({"(n-3)(2-p+-p-)", HalfInteger((problem.n - 3) * (2 - p_pos - p_neg))});
    out.terms.push_back({"2c1(A)", HalfInteger(2 * problem.c1)});
    HalfInteger pos;
    HalfInteger neg;
    for (const PunctureSpec& p : problem.punctures) {
        if (p.sign == PunctureSign::positive)
            pos += p.index + HalfInteger(p.bott_dim);
        else
            neg += p.index;
    }
    out.terms.push_back({"sum_pos(CZ+dim)", pos});
    out.terms.push_back({"-sum_neg(CZ)", -neg});
    if (problem.point_constraint) out.terms.push_back({"-(2n-2) point", HalfInteger(-(2 * problem.n - 2))});
    if (problem.tangency_order > 0) out.terms.push_back({"-2l tangency", HalfInteger(-2 * problem.tangency_order)});
    if (problem.marked_points > 0) out.terms.push_back({"+2m marked", HalfInteger(2 * problem.marked_points)});
    if (problem.node_count > 0) out.terms.push_back({"-2m(T) nodes", HalfInteger(-2 * problem.node_count)});

    HalfInteger total;
    for (const DimensionTerm& t : out.terms) total += t.value;
    out.total = total.to_int();
    return out;
}

int dim_punctured(const ModuliProblem& problem) { return expand_dimension(problem).total; }

ModuliProblem cpn_tangency_problem(int n) {
    ModuliProblem p;
    p.n = n;
    p.c1 = n + 1;
    p.point_constraint = true;
    p.tangency_order = n - 1;
    return p;
}

ModuliProblem audin_problem(int n, const std::vector<int>& mu) {
    ModuliProblem p;
    p.n = n;
    p.c1 = n + 1;
    p.point_constraint = true;
    p.tangency_order = n - 1;
    for (int m : mu) p.punctures.push_back({PunctureSign::positive, HalfInteger(-m), n - 1});
    return p;
}

int dim_plane(int n, int mu) { return (n - 3) + mu; }

int min_punctures_simple(int ell) {
    if (ell < 0) throw InputError("tangency order must be nonnegative");
    return ell + 2;
}

MulticoverWitness multicover_minimizer(int n) {
    if (n < 1) throw InputError("multicover bound needs n >= 1");
    MulticoverWitness best;
    best.punctures = std::numeric_limits<int>::max();
    const int limit = 2 * n + 2;
    for (int b = 1; b <= limit; ++b) {
        const int ell = std::max(0, (n + b - 1) / b - 1);
        for (int d = b; d <= limit; ++d) {
            for (int k = ell + 2; k <= ell + 4; ++k) {
                const int value = (k - 2) * d + b + 1;
                if (value < best.punctures) best = {b, d, k, ell, value};
            }
        }
    }
    return best;
}

int multicover_puncture_bound(int n) { return multicover_minimizer(n).punctures; }

MaslovDistribution::MaslovDistribution(int n, std::vector<int> mu) : n_(n), mu_(std::move(mu)) {
    if (n < 1) throw InputError("Maslov distribution: n must be positive");
    if (std::any_of(mu_.begin(), mu_.end(), [](int v) { return v <= 0; }))
        throw InputError("Maslov distribution: Maslov numbers must be positive");
    if (std::accumulate(mu_.begin(), mu_.end(), 0) != 2 * n + 2)
        throw InputError("Maslov distribution: Maslov numbers must sum to 2n+2");
}

std::vector<MaslovDistribution> audin_distributions(int n, bool even_only) {
    if (n < 1) throw InputError("Audin enumeration needs n >= 1");
    const int total = 2 * n + 2;
    const int step = even_only ? 2 : 1;
    std::vector<MaslovDistribution> out;
    std::vector<int> parts;

    // non-increasing partitions of `remaining` with parts <= cap
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            const int m = static_cast<int>(parts.size());
            if (m < n + 1) return;
            int budget = 0;
            for (int mu : parts) budget += mu + std::abs(2 - mu);
            if (budget <= 2 * m) out.emplace_back(n, parts);
            return;
        }
        for (int mu = std::min(cap, remaining); mu >= step; mu -= step) {
            if (even_only && mu % 2 != 0) continue;
            parts.push_back(mu);
            rec(remaining - mu, mu);
            parts.pop_back();
        }
    };
    rec(total, even_only ? total - total % 2 : total);

    std::sort(out.begin(), out.end(), [](const MaslovDistribution& a, const MaslovDistribution& b) {
        if (a.m() != b.m()) return a.m() < b.m();
        return a.mu() < b.mu();
    });
    return out;
}

bool evaluation_rank_inequality(int n, const MaslovDistribution& dist) {
    if (dist.n() != n) throw InputError("evaluation rank inequality: distribution built for another n");
    const int m = dist.m();
    // everything doubled to stay integral
    int twice_lhs = 2 * (2 * m - 2 * n - 2);
    for (int mu : dist.mu()) twice_lhs += 2 * n - 4 + mu - std::abs(2 - mu);
    return twice_lhs >= 2 * m * (n - 1);
}

}  // namespace lagcap
