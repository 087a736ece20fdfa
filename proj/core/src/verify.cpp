#include "lagcap/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "lagcap/capacities.hpp"
#include "lagcap/chekanov.hpp"
#include "lagcap/cylinders.hpp"
#include "lagcap/dm_trees.hpp"
#include "lagcap/enumerative.hpp"
#include "lagcap/errors.hpp"
#include "lagcap/moduli_dims.hpp"
#include "lagcap/symplectic_index.hpp"

namespace lagcap {
namespace {

using Rng = std::mt19937_64;
constexpr double kPi = std::numbers::pi;

// thrown inside a check to report a failed condition
struct CheckFailed {
    std::string what;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw CheckFailed{what};
}

std::vector<double> random_weights(Rng& rng, int count) {
    std::uniform_real_distribution<double> u(0.1, 10.0);
    std::vector<double> a(count);
    for (double& x : a) x = u(rng);
    return a;
}

std::vector<std::vector<double>> weight_sweep(Rng& rng, int count, int trials) {
    std::vector<std::vector<double>> out{std::vector<double>(count, 1.0)};
    for (int i = 0; i < trials; ++i) out.push_back(random_weights(rng, count));
    return out;
}

// t -> exp(J0 (t S1 + t^2 S2)) with random symmetric S1, S2
SymplecticPath random_path(Rng& rng, int n, int samples = 161) {
    std::normal_distribution<double> g(0.0, 1.2);
    Matrix s1(2 * n, 2 * n), s2(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            s1(i, j) = g(rng);
            s2(i, j) = g(rng);
        }
    s1 = 0.5 * (s1 + s1.transpose()).eval();
    s2 = 0.5 * (s2 + s2.transpose()).eval();
    const Matrix j0 = standard_j(n);
    return SymplecticPath::sample(n, [&](double t) -> Matrix { return (j0 * (t * s1 + t * t * s2)).exp(); }, samples);
}

LabelledTree random_tree(Rng& rng) {
    std::uniform_int_distribution<int> kdist(3, 7);
    std::uniform_int_distribution<int> vdist(1, 7);
    LabelledTree t;
    t.k = kdist(rng);
    const int v = vdist(rng);
    t.labels.resize(v);
    for (int i = 1; i < v; ++i) t.edges.emplace_back(std::uniform_int_distribution<int>(0, i - 1)(rng), i);
    for (int l = 1; l <= t.k; ++l) t.labels[std::uniform_int_distribution<int>(0, v - 1)(rng)].push_back(l);
    return t;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string check_bezout(const VerifyOptions& opt) {
    Rng rng(opt.seed + 1);
    SolverOptions so;
    so.tau_res = opt.tol;
    double worst_res = 0.0;
    double worst_sv = std::numeric_limits<double>::infinity();
    int systems = 0;
    for (int n = 2; n <= 3; ++n) {
        for (const auto& a : weight_sweep(rng, n + 1, 20)) {
            const SolutionSet s = count_projective_intersections(a, so);
            expect(static_cast<long>(s.size()) == factorial(n), "wrong count for n = " + std::to_string(n));
            for (std::size_t i = 0; i < s.size(); ++i) {
                worst_res = std::max(worst_res, s.residuals[i]);
                worst_sv = std::min(worst_sv, s.jacobian_min_sv[i]);
            }
            ++systems;
        }
    }
    expect(worst_res < 1e-10, "residual " + fmt(worst_res));
    expect(worst_sv > 1e-6, "smallest singular value " + fmt(worst_sv));
    return std::to_string(systems) + " systems, 2 and 6 points; max residual " + fmt(worst_res) + ", min sigma " +
           fmt(worst_sv);
}

std::string check_tangency(const VerifyOptions& opt) {
    Rng rng(opt.seed + 2);
    SolverOptions so;
    so.tau_res = opt.tol;
    double worst_jet = 0.0;
    std::normal_distribution<double> g;
    for (int n = 2; n <= 4; ++n) {
        for (const auto& a : weight_sweep(rng, n, 20)) {
            const SolutionSet s = count_tangency_lines(n, a, so);
            expect(static_cast<long>(s.size()) == factorial(n - 1), "wrong count for n = " + std::to_string(n));
        }
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = random_weights(rng, n);
            Eigen::VectorXcd p(n);
            for (int i = 0; i < n; ++i) p(i) = Complex(g(rng), g(rng));
            for (int k = 1; k <= n - 1; ++k) worst_jet = std::max(worst_jet, jet_identity_check(p, k, a));
        }
    }
    expect(worst_jet < 1e-12, "jet identity defect " + fmt(worst_jet));
    return "counts 1, 2, 6 over 21 weight vectors each; max jet defect " + fmt(worst_jet);
}

std::string check_power_sum(const VerifyOptions& opt) {
    Rng rng(opt.seed + 3);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const SolutionSet s = solve_weighted_power_system(random_weights(rng, n));
            expect(s.size() == 1 && s.points[0].norm() == 0.0, "solution set is not {0}");
        }
    }
    return "only the zero solution for n = 1, 2, 3 over 50 weight vectors each";
}

std::string check_audin(const VerifyOptions&) {
    for (int n = 1; n <= 12; ++n) {
        const auto d = audin_distributions(n, true);
        expect(d.size() == 1 && d[0].m() == n + 1 && d[0].mu() == std::vector<int>(n + 1, 2),
               "distribution list differs at n = " + std::to_string(n));
        expect(multicover_puncture_bound(n) == n + 1, "multicover bound differs at n = " + std::to_string(n));
    }
    return "unique (n+1, (2,...,2)) and bound n+1 for n = 1..12";
}

std::string check_dimensions(const VerifyOptions&) {
    for (int n = 2; n <= 10; ++n)
        expect(dim_punctured(cpn_tangency_problem(n)) == 0, "tangency problem nonzero at n = " + std::to_string(n));
    int problems = 0;
    for (int n = 1; n <= 8; ++n) {
        // all partitions of 2n + 2; m <= 2n + 2 holds automatically
        std::vector<int> parts;
        std::function<void(int, int)> rec = [&](int rest, int cap) {
            if (rest == 0) {
                const int m = static_cast<int>(parts.size());
                // (n-3)(2-m) + 2(n+1) + sum(n-1-mu_i) - (2n-2) - 2(n-1) collapses to 2m - 2n - 2
                expect(dim_punctured(audin_problem(n, parts)) == 2 * m - 2 * n - 2,
                       "Audin problem dimension differs at n = " + std::to_string(n));
                ++problems;
                return;
            }
            for (int mu = std::min(rest, cap); mu >= 1; --mu) {
                parts.push_back(mu);
                rec(rest - mu, mu);
                parts.pop_back();
            }
        };
        rec(2 * n + 2, 2 * n + 2);
    }
    return "tangency problem 0 for n = 2..10; " + std::to_string(problems) + " Audin problems equal 2m-2n-2";
}

std::string check_capacities(const VerifyOptions&) {
    constexpr double tol = 1e-12;
    for (int n = 1; n <= 12; ++n) {
        expect(std::abs(lagrangian_capacity(Domain::ball(n)).value - kPi / n) < tol, "ball value");
        expect(std::abs(lagrangian_capacity(Domain::cylinder(n)).value - kPi) < tol, "cylinder value");
        for (double r : {0.25, 0.5, 1.0, 1.7})
            expect(std::abs(lagrangian_capacity(Domain::polydisk(n, r)).value - kPi * r * r) < tol * r * r,
                   "polydisk value");
    }
    for (int n = 2; n <= 12; ++n) {
        const double cn = flat_torus_volume_constant(n);
        expect(cn < 2.0 * (n + 1), "C_n >= 2(n+1) at n = " + std::to_string(n));
        expect(2.0 * (n + 1) <= flat_torus_upper_bound(n), "2(n+1) > 2(n+sqrt n) at n = " + std::to_string(n));
    }
    expect(std::abs(flat_torus_volume_constant(1) - 4.0) < tol, "C_1 != 4");
    expect(std::abs(flat_torus_upper_bound(1) - 4.0) < tol, "2(1+sqrt 1) != 4");
    return "ball pi/n, cylinder pi, polydisk pi r^2; C_n < 2(n+1) <= 2(n+sqrt n) for n = 2..12, all equal 4 at n = 1";
}

std::string check_chekanov(const VerifyOptions&) {
    const RelClass dg = RelClass::d_gamma(), dt = RelClass::d_tau(), s0 = RelClass::s0();
    std::vector<RelClass> mu2{dg, s0 + dg * -2, s0 + dg * -2 + dt, s0 + dg * -2 + dt * -1};
    std::vector<RelClass> mu4;
    for (const RelClass& c : mu2) mu4.push_back(c * 2);
    for (const RelClass& c : {s0 + dg * -1, s0 + dg * -1 + dt, s0 + dg * -1 + dt * -1, s0 * 2 + dg * -4 + dt,
                              s0 * 2 + dg * -4 + dt * -1})
        mu4.push_back(c);
    std::sort(mu2.begin(), mu2.end());
    std::sort(mu4.begin(), mu4.end());
    expect(enumerate_classes(2) == mu2, "Maslov-2 classes differ from the listed four");
    expect(enumerate_classes(4) == mu4, "Maslov-4 classes differ from the doubles plus the listed five");

    const std::vector<std::vector<RelClass>> expected{
        {s0 + dg * -2, dg, dg}, {s0 + dg * -2, dg * 2}, {s0 + dg * -1, dg}};
    const auto splits = splitting_configurations();
    expect(splits == expected, "splitting configurations differ");
    for (const auto& tuple : splits)
        for (const RelClass& c : tuple) expect(is_gamma_multiple(boundary_class(c)), "boundary off the [Gamma] line");
    return "4 Maslov-2 classes, 9 Maslov-4 classes (4 doubles + 5), 3 splittings, all boundaries multiples of [Gamma]";
}

std::string check_index(const VerifyOptions& opt) {
    Rng rng(opt.seed + 8);
    int nondegenerate = 0;
    for (int n = 1; n <= 2; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            const SymplecticPath path = random_path(rng, n);
            const HalfInteger rs = robbin_salamon(path);
            expect(robbin_salamon(refine(path)) == rs, "refinement changed the index");
            expect(robbin_salamon(prepend_rotation_loop(path)) == rs + HalfInteger(2), "loop did not add 2");
            const SymplecticPath other = random_path(rng, n);
            expect(robbin_salamon(direct_sum(path, other)) == rs + robbin_salamon(other), "direct sum not additive");
            if (endpoint_degeneracy(path) > 1e-6) {
                expect(HalfInteger(conley_zehnder(path)) == rs, "CZ != RS on a nondegenerate path");
                ++nondegenerate;
            }
        }
    }
    int classes = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int j = 1; j <= 3; ++j) {
            GeodesicClass g;
            g.k.assign(n, 0);
            g.k[0] = j;
            if (n > 1) g.k[n - 1] += 1;
            const HalfInteger rs = robbin_salamon(linearized_geodesic_path(g));
            expect(rs == HalfInteger::from_twice(n - 1), "flat-torus RS != (n-1)/2");
            expect(bott_cz(rs, g.bott_dim()) == 0, "flat-torus CZ != 0");
            ++classes;
        }
    }
    return "200 paths each in Sp(2), Sp(4) (" + std::to_string(nondegenerate) + " nondegenerate); " +
           std::to_string(classes) + " flat-torus classes with RS = (n-1)/2, CZ = 0";
}

std::string check_dm_trees(const VerifyOptions& opt) {
    int trees = 0;
    for (int k = 3; k <= 6; ++k) {
        for (const LabelledTree& t : enumerate_stable_trees(k)) {
            expect(stratum_dim(t) == k - 3 - t.edge_count(), "stratum dimension");
            ++trees;
        }
    }
    for (int k = 4; k <= 7; ++k) {
        long two = 0;
        for (const LabelledTree& t : enumerate_stable_trees(k)) two += t.vertex_count() == 2;
        expect(two == (1L << (k - 1)) - k - 1, "2-vertex count at k = " + std::to_string(k));
    }
    Rng rng(opt.seed + 9);
    for (int trial = 0; trial < 500; ++trial) {
        const LabelledTree t = random_tree(rng);
        const LabelledTree once = stabilize(t);
        expect(is_stable(once), "stabilization is not stable");
        expect(stabilize(once) == once, "stabilization is not idempotent");
    }
    return std::to_string(trees) + " stable trees for k <= 6; 2-vertex counts 2^(k-1)-k-1 for k = 4..7; 500 random "
                                   "stabilizations idempotent";
}

std::string check_cylinders(const VerifyOptions&) {
    const RhoProfile rho = RhoProfile::blended();
    Eigen::VectorXd qbar(2), pbar(2);
    qbar << 0.3, 1.1;
    pbar << 0.0, 2.5;
    const CylinderSolution sol = integrate_orbit_cylinder(2, 3, qbar, pbar, rho);
    const double res = holomorphic_residual(sol, rho);
    expect(res < 1e-8, "residual " + fmt(res) + " at 200x200");
    const CylinderSolution coarse = integrate_orbit_cylinder(2, 3, qbar, pbar, rho, 2.0, {100, 100});
    const double res_coarse = holomorphic_residual(coarse, rho);
    expect(res_coarse >= 3.0 * res, "refinement gained less than 3x");
    expect(constancy_defect(sol) == 0.0 && p1_strictly_increasing(sol), "constancy or monotonicity");

    for (int k = 1; k <= 4; ++k) {
        const CylinderSolution c = integrate_orbit_cylinder(2, k, qbar, pbar, rho);
        Eigen::VectorXd pq(2), pp(2);
        pq << 1.0, qbar(1);
        pp << 0.5 * (c.p[0](120, 0) + c.p[0](121, 0)), pbar(1);
        expect(covering_degree(c, pq, pp) == k, "covering degree differs from k = " + std::to_string(k));
    }
    double worst_area = 0.0;
    Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
    for (int k = 1; k <= 2; ++k) {
        const CylinderSolution c = integrate_orbit_cylinder(2, k, qbar, zero, rho, 3.0);
        const ActionArea aa = action_area_check(c, std::log(2.0), std::log(6.0));
        worst_area = std::max(worst_area, std::abs(aa.area - aa.length_bound) / aa.length_bound);
    }
    expect(worst_area < 1e-6, "orbit-cylinder area off by " + fmt(worst_area));
    return "residual " + fmt(res) + " (100x100: " + fmt(res_coarse) + "); degrees 1..4; area equality to " +
           fmt(worst_area);
}

std::string check_taming(const VerifyOptions& opt) {
    expect(taming_margin(1.0, 1.0, 64) == 0.5, "taming_margin(1) != 0.5");
    Rng rng(opt.seed + 11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 10000; ++i) worst = std::min(worst, taming_margin(1.0, u(rng), 16));
    expect(worst >= 0.5, "margin " + fmt(worst) + " below 1/2");
    return "margin exactly 0.5 at K = 1; min over 10^4 samples " + fmt(worst);
}

struct CheckSpec {
    std::string name;
    double time_limit;  // seconds, 0 = none
    std::function<std::string(const VerifyOptions&)> run;
};

const std::vector<CheckSpec>& specs() {
    static const std::vector<CheckSpec> s{
        {"bezout-counts", 5.0, check_bezout},
        {"tangency-counts", 0.0, check_tangency},
        {"power-sum-triviality", 0.0, check_power_sum},
        {"audin-engine", 1.0, check_audin},
        {"dimension-formulas", 0.0, check_dimensions},
        {"capacities", 0.0, check_capacities},
        {"chekanov-enumeration", 0.0, check_chekanov},
        {"index-suite", 0.0, check_index},
        {"dm-trees", 0.0, check_dm_trees},
        {"cylinders", 30.0, check_cylinders},
        {"taming-margin", 0.0, check_taming},
    };
    return s;
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : specs()) out.push_back(s.name);
        return out;
    }();
    return names;
}

CheckResult run_check(int id, const VerifyOptions& opt) {
    if (id < 1 || id > static_cast<int>(specs().size())) throw InputError("no check with id " + std::to_string(id));
    const CheckSpec& spec = specs()[id - 1];
    CheckResult r;
    r.id = id;
    r.name = spec.name;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.detail = spec.run(opt);
        r.passed = true;
    } catch (const CheckFailed& f) {
        r.detail = f.what;
    } catch (const std::exception& e) {
        r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && spec.time_limit > 0 && r.seconds > spec.time_limit) {
        r.passed = false;
        r.detail += "; took " + fmt(r.seconds) + " s, limit " + fmt(spec.time_limit) + " s";
    }
    return r;
}

std::vector<CheckResult> run_all(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int id = 1; id <= static_cast<int>(specs().size()); ++id) out.push_back(run_check(id, opt));
    return out;
}

}  // namespace lagcap
