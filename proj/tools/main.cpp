// lagcap: command-line front end. Exit status 0 on success, 1 when a computed
// result contradicts a proved statement, 2 on malformed input.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "lagcap/capacities.hpp"
#include "lagcap/errors.hpp"

namespace {

using namespace lagcap;
using io::json;
using io::Report;

struct Globals {
    std::string format = "table";
    double tol = 1e-10;
    std::uint64_t seed = 20'240'601;
    std::string out;
};

struct Outcome {
    Report report;
    int status = 0;
};

Eigen::VectorXd to_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

// ---- index ----

struct IndexArgs {
    std::string input;
    std::vector<int> geodesic;
    int samples = 65;
};

Outcome run_index(const IndexArgs& args) {
    Outcome out;
    out.report.command = "index";
    if (!args.geodesic.empty()) {
        const GeodesicClass cls{args.geodesic};
        const auto path = linearized_geodesic_path(cls, args.samples);
        const HalfInteger rs = robbin_salamon(path);
        const int cz = bott_cz(rs, cls.bott_dim());
        // the vertical distribution along the lift is constant in the flat trivialization
        Matrix vertical = Matrix::Zero(2 * cls.n(), cls.n());
        vertical.bottomRows(cls.n()).setIdentity();
        const int mu = maslov_loop(LagrangianLoop(cls.n(), std::vector<Matrix>(args.samples, vertical)));
        out.report.add("length", cls.length());
        out.report.add("robbin_salamon", io::to_json(rs), "Lemma CZ");
        out.report.add("bott_dim", cls.bott_dim());
        out.report.add("conley_zehnder", cz, "Lemma CZ");
        out.report.add("maslov", mu, "Lemma CZ");
        out.report.add("morse_index", GeodesicClass::morse_index(), "Lemma CZ");
        const bool ok = viterbo_relation(cz, mu, GeodesicClass::morse_index());
        out.report.add("cz_plus_maslov_equals_index", ok, "Lemma CZ");
        if (!ok) out.status = 1;
        return out;
    }
    if (args.input.empty()) throw InputError("index: give --input or --geodesic");

    const json doc = io::read_input(args.input);
    const auto& samples = doc.at("samples");
    if (!samples.empty() && samples[0].contains("frame")) {
        const auto loop = io::loop_from_json(doc);
        out.report.add("maslov", maslov_loop(loop));
        return out;
    }
    auto path = io::path_from_json(doc);
    const HalfInteger rs = robbin_salamon(path);
    out.report.add("robbin_salamon", io::to_json(rs));
    const double degeneracy = endpoint_degeneracy(path);
    out.report.add("endpoint_degeneracy", degeneracy);
    if (doc.contains("trivialization")) {
        std::vector<Matrix> frame;
        for (const auto& m : doc.at("trivialization")) frame.push_back(io::matrix_from_json(m));
        const auto changed = change_trivialization(path, frame);
        out.report.add("robbin_salamon_changed_trivialization", io::to_json(robbin_salamon(changed)));
    }
    try {
        out.report.add("conley_zehnder", conley_zehnder(path));
    } catch (const PreconditionError& e) {
        out.report.add("conley_zehnder", nullptr, e.what());
    }
    return out;
}

// ---- dims ----

struct DimsArgs {
    std::string kind;
    int n = 2;
    std::string input;
    std::vector<int> mu;
    bool all = false;
};

void add_expansion(Report& r, const DimensionExpansion& e, const std::string& citation) {
    for (const auto& t : e.terms) r.add(t.label, io::to_json(t.value), citation);
    r.add("total", e.total, citation);
}

Outcome run_dims(const DimsArgs& args) {
    Outcome out;
    out.report.command = "dims " + args.kind;
    auto& r = out.report;
    if (args.kind == "cpn") {
        add_expansion(r, expand_dimension(cpn_tangency_problem(args.n)), "Prop. reg-proj");
    } else if (args.kind == "problem") {
        if (args.input.empty()) throw InputError("dims problem: give --input");
        add_expansion(r, expand_dimension(io::moduli_problem_from_json(io::read_input(args.input))), "Cor. dim");
    } else if (args.kind == "audin") {
        const auto dists = audin_distributions(args.n, !args.all);
        r.add("distributions", static_cast<int>(dists.size()), "Audin argument");
        for (const auto& d : dists) {
            json row = {{"quantity", "distribution"}, {"value", io::to_json(d)}};
            row["dimension"] = dim_punctured(audin_problem(d.n(), d.mu()));
            row["rank_inequality"] = evaluation_rank_inequality(d.n(), d);
            row["citation"] = "Audin argument";
            r.add(std::move(row));
        }
        r.add("multicover_puncture_bound", multicover_puncture_bound(args.n), "Audin argument");
    } else if (args.kind == "plane") {
        if (args.mu.size() != 1) throw InputError("dims plane: give one --mu");
        r.add("dim_plane", dim_plane(args.n, args.mu[0]), "Cor. dim");
    } else if (args.kind == "multicover") {
        const auto w = multicover_minimizer(args.n);
        r.add("minimizer", json{{"b", w.b}, {"d", w.d}, {"k", w.k}, {"ell", w.ell}, {"punctures", w.punctures}},
              "Audin argument");
        r.add("multicover_puncture_bound", multicover_puncture_bound(args.n), "Audin argument");
        r.add("min_punctures_simple", min_punctures_simple(args.n - 1), "Audin argument");
    }
    return out;
}

// ---- capacity ----

struct CapacityArgs {
    std::string kind;
    int n = 2;
    double r = 1.0;
    std::vector<double> axes;
    bool all_lagrangians = false;
};

json capacity_row(const std::string& domain, const CapacityValue& v) {
    return {{"domain", domain},
            {"value", v.value},
            {"status", to_string(v.status)},
            {"lower_bound", v.lower_bound},
            {"citation", v.citation}};
}

std::string domain_label(const Domain& d) {
    if (d.kind == DomainKind::ellipsoid) {
        std::string s = "E(";
        for (std::size_t i = 0; i < d.axes.size(); ++i) s += (i ? "," : "") + io::format12(d.axes[i]);
        return s + ")";
    }
    return to_string(d.kind) + "(n=" + std::to_string(d.n) + ", r=" + io::format12(d.radius) + ")";
}

Outcome run_capacity(const CapacityArgs& args) {
    Outcome out;
    out.report.command = "capacity " + args.kind;
    auto& r = out.report;
    const auto& k = args.kind;
    if (k == "ball" || k == "cylinder" || k == "polydisk" || k == "ellipsoid") {
        Domain d = k == "ball"       ? Domain::ball(args.n, args.r)
                   : k == "cylinder" ? Domain::cylinder(args.n, args.r)
                   : k == "polydisk" ? Domain::polydisk(args.n, args.r)
                                     : Domain::ellipsoid(args.axes);
        d.validate();
        const auto v = args.all_lagrangians ? lagrangian_capacity_all_lagrangians(d) : lagrangian_capacity(d);
        r.add(capacity_row(domain_label(d), v));
    } else if (k == "torus") {
        r.add({{"domain", "T^n(r=" + io::format12(args.r) + ")"},
               {"value", a_min_standard_torus(args.r)},
               {"status", "proved"},
               {"citation", "A_min = pi r^2"}});
    } else if (k == "embeds") {
        r.add({{"domain", "P(n=" + std::to_string(args.n) + ", r=" + io::format12(args.r) + ") -> B(1)"},
               {"value", polydisk_embeds_ball(args.n, args.r)},
               {"status", "proved"},
               {"citation", "Cor. cap"}});
    } else if (k == "chord") {
        const Domain d = args.axes.empty() ? Domain::ball(args.n, args.r) : Domain::ellipsoid(args.axes);
        d.validate();
        r.add(capacity_row(domain_label(d), chord_bound(d)));
    } else if (k == "flat-torus") {
        const int n = args.n;
        const auto w = weinstein_bounds(MetricSpec::flat_torus(n), n);
        const double cn = flat_torus_volume_constant(n);
        const double upper = flat_torus_upper_bound(n);
        const std::string label = "T^" + std::to_string(n);
        const std::string cite = "App. emb-cap";
        r.add({{"domain", label}, {"quantity", "C_n"}, {"value", cn}, {"citation", cite}});
        r.add({{"domain", label}, {"quantity", "geodesic_bound"}, {"value", w.geodesic_bound}, {"citation", cite}});
        r.add({{"domain", label}, {"quantity", "volume_bound"}, {"value", w.volume_bound}, {"citation", cite}});
        r.add({{"domain", label}, {"quantity", "2(n+1)"}, {"value", 2.0 * (n + 1)}, {"citation", cite}});
        r.add({{"domain", label}, {"quantity", "2(n+sqrt n)"}, {"value", upper}, {"citation", cite}});
        const double lower = 2.0 * (n + 1);
        const bool ordered = n == 1 ? (std::abs(cn - lower) <= 1e-12 && std::abs(lower - upper) <= 1e-12)
                                    : (cn < lower && lower <= upper + 1e-12);
        r.add({{"domain", label}, {"quantity", "ordering"}, {"value", ordered}, {"citation", cite}});
        if (!ordered) out.status = 1;
    }
    return out;
}

// ---- count ----

struct CountArgs {
    std::string kind;
    int n = 2;
    std::vector<double> weights;
    std::vector<int> k;
};

std::vector<double> weights_or_ones(const std::vector<double>& w, std::size_t size) {
    if (w.empty()) return std::vector<double>(size, 1.0);
    if (w.size() != size) {
        throw InputError("expected " + std::to_string(size) + " weights, got " + std::to_string(w.size()));
    }
    return w;
}

void add_solutions(Report& r, const SolutionSet& s, const std::string& citation) {
    double max_res = 0.0;
    double min_sv = s.size() ? INFINITY : 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        max_res = std::max(max_res, s.residuals[i]);
        min_sv = std::min(min_sv, s.jacobian_min_sv[i]);
    }
    r.add("points", static_cast<int>(s.size()), citation);
    r.add("max_residual", max_res, citation);
    r.add("min_jacobian_singular_value", min_sv, citation);
    for (std::size_t i = 0; i < s.size(); ++i) {
        r.add({{"quantity", "point " + std::to_string(i + 1)},
               {"value", io::to_json(s).at("points")[i]},
               {"residual", s.residuals[i]},
               {"min_sv", s.jacobian_min_sv[i]},
               {"multiplicity", s.multiplicities[i]}});
    }
    r.data["solutions"] = io::to_json(s);
}

Outcome run_count(const CountArgs& args, const Globals& g) {
    Outcome out;
    out.report.command = "count " + args.kind;
    auto& r = out.report;
    SolverOptions opt;
    opt.tau_res = g.tol;
    const int n = args.n;
    if (args.kind == "bezout") {
        const auto a = weights_or_ones(args.weights, static_cast<std::size_t>(n) + 1);
        const auto s = count_projective_intersections(a, opt);
        add_solutions(r, s, "Lemma proj");
        bool transverse = true;
        for (double sv : s.jacobian_min_sv) transverse = transverse && sv > opt.tau_trans;
        r.add("all_transverse", transverse, "Lemma proj");
    } else if (args.kind == "tangency") {
        const auto a = weights_or_ones(args.weights, static_cast<std::size_t>(n));
        add_solutions(r, count_tangency_lines(n, a, opt), "Prop. reg-proj");
    } else if (args.kind == "power-sum") {
        const auto a = weights_or_ones(args.weights, static_cast<std::size_t>(n));
        const auto s = solve_weighted_power_system(a, opt);
        r.add("only_solution_is_zero", true, "Lemma lin");
        r.add("solutions", static_cast<int>(s.size()), "Lemma lin");
        r.add("multiplicity_at_zero", s.multiplicities.front(), "Lemma lin");
        r.data["solutions"] = io::to_json(s);
    } else if (args.kind == "jet") {
        const auto a = weights_or_ones(args.weights, static_cast<std::size_t>(n));
        const auto s = count_tangency_lines(n, a, opt);
        std::vector<int> orders = args.k;
        if (orders.empty())
            for (int k = 1; k < n; ++k) orders.push_back(k);
        for (int k : orders) {
            double worst = 0.0;
            for (const auto& p : s.points) worst = std::max(worst, jet_identity_check(p, k, a));
            r.add("jet_defect_k" + std::to_string(k), worst, "Prop. reg-proj");
            if (!(worst < 1e-12)) out.status = 1;
        }
    }
    return out;
}

// ---- chekanov ----

struct ChekanovArgs {
    std::string kind;
    int mu = 2;
    std::vector<int> cls;
    std::string input;
};

json class_row(const RelClass& c, const std::string& citation) {
    json row = io::to_json(c);
    const auto ints = intersection_row(c);
    row["maslov"] = maslov(c);
    row["intersections"] = std::vector<int>(ints.begin(), ints.end());
    const auto bd = boundary_class(c);
    row["boundary"] = json::array({bd[0], bd[1]});
    row["citation"] = citation;
    return row;
}

Outcome run_chekanov(const ChekanovArgs& args) {
    Outcome out;
    out.report.command = "chekanov " + args.kind;
    auto& r = out.report;
    if (args.kind == "classes") {
        for (const auto& c : enumerate_classes(args.mu)) r.add(class_row(c, "Lemma CS"));
    } else if (args.kind == "row") {
        if (args.cls.size() != 3) throw InputError("chekanov row: --class takes a_gamma,a_tau,b");
        r.add(class_row({args.cls[0], args.cls[1], args.cls[2]}, "Lemma CS"));
    } else if (args.kind == "splittings") {
        const auto configs = splitting_configurations();
        for (std::size_t i = 0; i < configs.size(); ++i) {
            json classes = json::array();
            std::string symbolic;
            bool gamma = true;
            for (const auto& c : configs[i]) {
                classes.push_back(io::to_json(c));
                symbolic += (symbolic.empty() ? "" : " | ") + to_symbolic(c);
                gamma = gamma && is_gamma_multiple(boundary_class(c));
            }
            r.add({{"quantity", "splitting " + std::to_string(i + 1)},
                   {"value", symbolic},
                   {"classes", std::move(classes)},
                   {"boundaries_gamma_multiples", gamma},
                   {"citation", "Cor. CS"}});
        }
    } else if (args.kind == "tree") {
        if (args.input.empty()) throw InputError("chekanov tree: give --input");
        const auto tree = io::asymptotic_tree_from_json(io::read_input(args.input));
        const auto res = propagate_tree_detailed(tree);
        json steps = json::array();
        for (const auto& s : res.steps) steps.push_back({{"node", s.node}, {"certified_edge", s.certified}});
        r.add("steps", std::move(steps), "Cor. CS");
        r.add("certified", res.certified, "Cor. CS");
        if (!res.certified) out.status = 1;
    }
    return out;
}

// ---- dmtree ----

struct DmArgs {
    std::string kind;
    int k = 4;
    std::string input;
};

json tree_row(const LabelledTree& t) {
    json row = io::to_json(t);
    row["canonical"] = canonical_form(t);
    row["stable"] = is_stable(t);
    if (is_stable(t)) row["dim"] = stratum_dim(t);
    row["codim"] = stratum_codim(t);
    return row;
}

Outcome run_dmtree(const DmArgs& args) {
    Outcome out;
    out.report.command = "dmtree " + args.kind;
    auto& r = out.report;
    if (args.kind == "enumerate") {
        for (const auto& t : enumerate_stable_trees(args.k)) r.add(tree_row(t));
    } else if (args.kind == "decompositions") {
        for (const auto& d : stable_decompositions(args.k)) r.add({{"parts", io::to_json(d)}});
    } else {
        if (args.input.empty()) throw InputError("dmtree " + args.kind + ": give --input");
        const json doc = io::read_input(args.input);
        if (args.kind == "stabilize") {
            const auto t = io::labelled_tree_from_json(doc);
            const auto s = stabilize(t);
            json row = tree_row(s);
            row["idempotent"] = stabilize(s) == s;
            r.add(std::move(row));
        } else if (args.kind == "dim") {
            r.add(tree_row(io::labelled_tree_from_json(doc)));
        } else if (args.kind == "nodal") {
            const auto c = io::nodal_curve_from_json(doc);
            const bool ok = validate_nodal(c);
            r.add("valid", ok);
            if (!ok) out.status = 2;
        }
    }
    return out;
}

// ---- cylinder ----

struct CylinderArgs {
    int n = 2;
    int k = 1;
    std::vector<double> qbar;
    std::vector<double> pbar;
    double s_max = 2.0;
    int s_points = 200;
    int t_points = 200;
    double r0 = 0.5;
    double r1 = 2.0;
    double r_max = 1e8;
    bool constant_rho = false;
    double hol_tol = 1e-8;
    std::string dump_format;
    std::string dump_file;
    std::vector<double> area;
    std::vector<double> probe_q;
    std::vector<double> probe_p;
};

Outcome run_cylinder(const CylinderArgs& a) {
    Outcome out;
    out.report.command = "cylinder";
    auto& r = out.report;
    const auto n = static_cast<std::size_t>(a.n);
    const auto qbar = a.qbar.empty() ? Eigen::VectorXd::Zero(a.n).eval() : to_vector(a.qbar);
    const auto pbar = a.pbar.empty() ? Eigen::VectorXd::Zero(a.n).eval() : to_vector(a.pbar);
    const auto profile = a.constant_rho ? RhoProfile::constant_one(a.r_max) : RhoProfile::blended(a.r0, a.r1, a.r_max);
    const auto sol = integrate_orbit_cylinder(a.n, a.k, qbar, pbar, profile, a.s_max, {a.s_points, a.t_points});

    const std::string cite = "Lemma torus";
    const double residual = holomorphic_residual(sol, profile);
    r.add("holomorphic_residual", residual, cite);
    r.add("residual_within_tolerance", residual < a.hol_tol, cite);
    r.add("constancy_defect", constancy_defect(sol), cite);
    r.add("p1_strictly_increasing", p1_strictly_increasing(sol), cite);
    r.add("family_dimension", orbit_family_dimension(sol), cite);

    Eigen::VectorXd probe_q(a.n);
    Eigen::VectorXd probe_p(a.n);
    if (!a.probe_q.empty() || !a.probe_p.empty()) {
        if (a.probe_q.size() != n || a.probe_p.size() != n) throw InputError("probe needs n q and n p coordinates");
        probe_q = to_vector(a.probe_q);
        probe_p = to_vector(a.probe_p);
    } else {
        // midway between two central rows, off the t grid
        const auto mid = static_cast<Eigen::Index>(sol.s.size() / 2);
        probe_q = qbar;
        probe_p = pbar;
        probe_q(0) = std::fmod(qbar(0) + 0.5, 2.0 * std::numbers::pi);
        probe_p(0) = 0.5 * (sol.p[0](mid - 1, 0) + sol.p[0](mid, 0));
    }
    r.add("covering_degree", covering_degree(sol, probe_q, probe_p), cite);

    if (!a.area.empty()) {
        if (a.area.size() != 2) throw InputError("--area takes r_lo,r_hi");
        const auto aa = action_area_check(sol, a.area[0], a.area[1]);
        r.add("area", aa.area, "Lemma action");
        r.add("length_bound", aa.length_bound, "Lemma action");
        r.add("relative_gap", (aa.area - aa.length_bound) / aa.length_bound, "Lemma action");
    }

    if (!a.dump_format.empty()) {
        const std::string body = a.dump_format == "csv" ? io::cylinder_csv(sol) : io::rounded(io::to_json(sol)).dump() + "\n";
        if (a.dump_file.empty()) throw InputError("--dump needs --dump-file");
        std::ofstream f(a.dump_file);
        if (!f) throw InputError("cannot write " + a.dump_file);
        f << body;
        r.add("dump", a.dump_file);
    }
    return out;
}

// ---- verify-all ----

struct VerifyArgs {
    int only = 0;
    bool timing = false;
};

Outcome run_verify(const VerifyArgs& args, const Globals& g) {
    Outcome out;
    out.report.command = "verify-all";
    VerifyOptions opt;
    opt.seed = g.seed;
    opt.tol = g.tol;
    std::vector<CheckResult> results;
    if (args.only) {
        results.push_back(run_check(args.only, opt));
    } else {
        results = run_all(opt);
    }
    for (const auto& res : results) {
        json row = {{"id", res.id}, {"check", res.name}, {"result", res.passed ? "PASS" : "FAIL"}, {"detail", res.detail}};
        if (args.timing) row["seconds"] = res.seconds;
        out.report.add(std::move(row));
        if (!res.passed) out.status = 1;
    }
    return out;
}

void emit(const Outcome& o, const Globals& g) {
    const std::string text = g.format == "json" ? o.report.to_json().dump(2) + "\n" : o.report.to_table();
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw InputError("cannot write " + g.out);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Index, dimension, capacity and enumeration computations for Lagrangian capacity bounds", "lagcap"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--tol", g.tol, "Residual tolerance");
    app.add_option("--seed", g.seed, "Seed for randomized sweeps");
    app.add_option("--out", g.out, "Write the report to this path");

    std::function<Outcome()> action;

    IndexArgs ia;
    auto* index = app.add_subcommand("index", "Robbin-Salamon, Conley-Zehnder and Maslov indices");
    index->add_option("--input", ia.input, "Path or loop document (file, '-' or inline JSON)");
    index->add_option("--geodesic", ia.geodesic, "Flat-torus geodesic class k_1,...,k_n")->delimiter(',');
    index->add_option("--samples", ia.samples, "Samples of the linearized flow")->check(CLI::Range(2, 100000));
    index->callback([&] { action = [&] { return run_index(ia); }; });

    DimsArgs da;
    auto* dims = app.add_subcommand("dims", "Expected dimensions of moduli spaces");
    dims->add_option("kind", da.kind)->required()->check(CLI::IsMember({"cpn", "audin", "problem", "plane", "multicover"}));
    dims->add_option("--n", da.n)->check(CLI::Range(1, 1000));
    dims->add_option("--input", da.input, "ModuliProblem document");
    dims->add_option("--mu", da.mu)->delimiter(',');
    dims->add_flag("--all", da.all, "Include distributions with odd entries");
    dims->callback([&] { action = [&] { return run_dims(da); }; });

    CapacityArgs ca;
    auto* cap = app.add_subcommand("capacity", "Lagrangian capacities and embedding bounds");
    cap->add_option("kind", ca.kind)
        ->required()
        ->check(CLI::IsMember({"ball", "cylinder", "polydisk", "ellipsoid", "torus", "embeds", "chord", "flat-torus"}));
    cap->add_option("--n", ca.n)->check(CLI::Range(1, 1000));
    cap->add_option("--r", ca.r);
    cap->add_option("--axes", ca.axes, "Ellipsoid areas a_1 <= ... <= a_n")->delimiter(',');
    cap->add_flag("--all-lagrangians", ca.all_lagrangians);
    cap->callback([&] { action = [&] { return run_capacity(ca); }; });

    CountArgs na;
    auto* count = app.add_subcommand("count", "Solution counts of weighted power-sum systems");
    count->add_option("kind", na.kind)->required()->check(CLI::IsMember({"bezout", "tangency", "power-sum", "jet"}));
    count->add_option("--n", na.n)->check(CLI::Range(1, 4));
    count->add_option("--weights", na.weights, "Positive weights")->delimiter(',');
    count->add_option("--k", na.k, "Jet orders")->delimiter(',');
    count->callback([&] { action = [&] { return run_count(na, g); }; });

    ChekanovArgs ka;
    auto* chek = app.add_subcommand("chekanov", "Relative classes of the Chekanov torus");
    chek->add_option("kind", ka.kind)->required()->check(CLI::IsMember({"classes", "row", "splittings", "tree"}));
    chek->add_option("--mu", ka.mu)->check(CLI::Range(0, 1000));
    chek->add_option("--class", ka.cls, "a_gamma,a_tau,b")->delimiter(',');
    chek->add_option("--input", ka.input, "AsymptoticTree document");
    chek->callback([&] { action = [&] { return run_chekanov(ka); }; });

    DmArgs ma;
    auto* dm = app.add_subcommand("dmtree", "Stable trees and strata of genus-zero curves");
    dm->add_option("kind", ma.kind)
        ->required()
        ->check(CLI::IsMember({"enumerate", "stabilize", "dim", "decompositions", "nodal"}));
    dm->add_option("--k", ma.k)->check(CLI::Range(2, 12));
    dm->add_option("--input", ma.input, "LabelledTree or NodalCurve document");
    dm->callback([&] { action = [&] { return run_dmtree(ma); }; });

    CylinderArgs ya;
    auto* cyl = app.add_subcommand("cylinder", "Orbit cylinders in T*T^n");
    cyl->add_option("--n", ya.n)->check(CLI::Range(1, 16));
    cyl->add_option("--k", ya.k)->check(CLI::Range(1, 1000));
    cyl->add_option("--qbar", ya.qbar)->delimiter(',');
    cyl->add_option("--pbar", ya.pbar)->delimiter(',');
    cyl->add_option("--S", ya.s_max, "Half-length of the s interval");
    cyl->add_option("--s-points", ya.s_points)->check(CLI::Range(16, 100000));
    cyl->add_option("--t-points", ya.t_points)->check(CLI::Range(16, 100000));
    cyl->add_option("--r0", ya.r0);
    cyl->add_option("--r1", ya.r1);
    cyl->add_option("--rmax", ya.r_max);
    cyl->add_flag("--constant-rho", ya.constant_rho);
    cyl->add_option("--hol-tol", ya.hol_tol);
    cyl->add_option("--dump", ya.dump_format)->check(CLI::IsMember({"json", "csv"}));
    cyl->add_option("--dump-file", ya.dump_file);
    cyl->add_option("--area", ya.area, "log|p| levels r_lo,r_hi")->delimiter(',');
    cyl->add_option("--probe-q", ya.probe_q)->delimiter(',');
    cyl->add_option("--probe-p", ya.probe_p)->delimiter(',');
    cyl->callback([&] { action = [&] { return run_cylinder(ya); }; });

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify-all", "Run the acceptance suite");
    ver->add_option("--check", va.only, "Run a single check by id")->check(CLI::Range(1, 11));
    ver->add_flag("--timing", va.timing);
    ver->callback([&] { action = [&] { return run_verify(va, g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Outcome o = action();
        emit(o, g);
        return o.status;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
