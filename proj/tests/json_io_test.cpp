#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "json_io.hpp"
#include "lagcap/errors.hpp"
#include "support.hpp"

using namespace lagcap;
using io::json;

TEST_CASE("twelve significant digits") {
    CHECK(io::format12(std::acos(-1.0)) == "3.14159265359");
    CHECK(io::round12(1.0 / 3.0) == 0.333333333333);
    CHECK(io::rounded(json{{"x", 2.0 / 3.0}, {"n", 3}}).dump() == R"({"x":0.666666666667,"n":3})");
    CHECK(io::cell_text(io::to_json(HalfInteger::from_twice(-3))) == "-3/2");
    CHECK(io::cell_text(io::to_json(HalfInteger(4))) == "4");
}

TEST_CASE("half-integers and matrices") {
    for (int twice = -5; twice <= 5; ++twice) {
        const auto h = HalfInteger::from_twice(twice);
        CHECK(io::half_integer_from_json(io::to_json(h)) == h);
    }
    CHECK_THROWS_AS(io::half_integer_from_json(json{{"num", 1}, {"den", 3}}), InputError);
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1, 2], [3]]")), InputError);
}

TEST_CASE("paths and loops round-trip") {
    test::Rng rng(3);
    const auto path = test::random_path(rng, 2, 33);
    const auto back = io::path_from_json(io::to_json(path));
    CHECK(back.size() == path.size());
    CHECK(robbin_salamon(back) == robbin_salamon(path));
    CHECK_THROWS_AS(io::path_from_json(json{{"n", 1}}), InputError);
    CHECK_THROWS_AS(io::path_from_json(json::parse(R"({"n": 1, "samples": [{"t": 0, "matrix": "x"}]})")), InputError);

    std::vector<Matrix> frames;
    for (int s = 0; s <= 32; ++s) {
        const double phase = std::acos(-1.0) * s / 32.0;
        Matrix f(2, 1);
        f << std::cos(phase), -std::sin(phase);
        frames.push_back(f);
    }
    const LagrangianLoop loop(1, frames);
    CHECK(maslov_loop(io::loop_from_json(io::to_json(loop))) == maslov_loop(loop));
}

TEST_CASE("moduli problems round-trip") {
    const auto p = audin_problem(3, {2, 2, 2, 2});
    const auto back = io::moduli_problem_from_json(io::to_json(p));
    CHECK(dim_punctured(back) == dim_punctured(p));
    CHECK(io::to_json(back) == io::to_json(p));
    CHECK_THROWS_AS(io::moduli_problem_from_json(json::parse(R"({"n": 2, "punctures": [{"sign": "?", "index": 1}]})")),
                    InputError);
}

TEST_CASE("solution sets round-trip") {
    const auto s = count_projective_intersections(std::vector<double>{1.0, 2.0, 3.0});
    const auto back = io::solution_set_from_json(io::to_json(s));
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(projective_distance(back.points[i], s.points[i]) < 1e-15);
    CHECK(back.multiplicities == s.multiplicities);
}

TEST_CASE("classes and trees round-trip") {
    for (const auto& c : enumerate_classes(4)) CHECK(io::rel_class_from_json(io::to_json(c)) == c);

    AsymptoticTree t;
    t.punctures = {{{1, 0}, {1, 0}}, {{-1, 0}}, {{-1, 0}, {2, 0}}};
    t.edges = {{0, 0, 1, 0}, {0, 1, 2, 0}};
    const auto tj = io::to_json(t);
    CHECK(io::to_json(io::asymptotic_tree_from_json(tj)) == tj);

    for (const auto& lt : enumerate_stable_trees(5)) CHECK(io::labelled_tree_from_json(io::to_json(lt)) == lt);
    CHECK_THROWS_AS(io::labelled_tree_from_json(json::parse(R"({"labels": [[1], [2]], "edges": []})")),
                    ConstraintViolation);
}

TEST_CASE("nodal curves round-trip") {
    NodalCurve c;
    c.tree = {4, {{1, 2}, {3, 4}}, {{0, 1}}};
    c.marked = {{{1, {1, 0, 0}}, {2, {0, 1, 0}}}, {{3, {1, 0, 0}}, {4, {0, 1, 0}}}};
    c.node_points = {{{0, 1}, {0, 0, 1}}, {{1, 0}, {0, 0, -1}}};
    const auto back = io::nodal_curve_from_json(io::to_json(c));
    CHECK(validate_nodal(back));
    CHECK(io::to_json(back) == io::to_json(c));
}

TEST_CASE("cylinder solutions round-trip") {
    Eigen::VectorXd q(2), p(2);
    q << 0.3, 1.1;
    p << 0.0, 2.5;
    const auto sol = integrate_orbit_cylinder(2, 2, q, p, RhoProfile::blended(), 1.0, {20, 16});
    const auto back = io::cylinder_solution_from_json(io::to_json(sol));
    CHECK(back.k == 2);
    CHECK((back.p[0] - sol.p[0]).cwiseAbs().maxCoeff() == 0.0);
    const auto csv = io::cylinder_csv(sol);
    CHECK(csv.rfind("s,t,q1,q2,p1,p2\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 20 * 16);
}

TEST_CASE("reports") {
    io::Report r;
    r.command = "demo";
    r.add("x", 1.0 / 7.0, "Cor. cap");
    r.add(json{{"quantity", "h"}, {"value", io::to_json(HalfInteger::from_twice(1))}});
    const auto j = r.to_json();
    CHECK(j.at("schema_version") == io::kSchemaVersion);
    CHECK(j.at("results")[0].at("value").get<double>() == 0.142857142857);
    CHECK(r.to_json().dump() == j.dump());
    const auto table = r.to_table();
    CHECK(table.find("0.142857142857") != std::string::npos);
    CHECK(table.find("1/2") != std::string::npos);
    CHECK_THROWS_AS(io::parse("{"), InputError);
}
