#include "json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lagcap/errors.hpp"

namespace lagcap::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed ") + what + ": " + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

json vector_to_json(const Eigen::VectorXd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

Eigen::VectorXd vector_from_json(const json& j) {
    const auto values = j.get<std::vector<double>>();
    return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

json complex_vector_to_json(const Eigen::VectorXcd& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(json::array({v(i).real(), v(i).imag()}));
    return a;
}

Eigen::VectorXcd complex_vector_from_json(const json& j) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].size() != 2) throw InputError("complex numbers are [re, im] pairs");
        v(static_cast<Eigen::Index>(i)) = {j[i][0].get<double>(), j[i][1].get<double>()};
    }
    return v;
}

json h1_to_json(const H1Class& h) { return json::array({h[0], h[1]}); }

H1Class h1_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("H_1 classes are [gamma, tau] pairs");
    return {j[0].get<int>(), j[1].get<int>()};
}

json point_to_json(const Eigen::Vector3d& p) { return json::array({p(0), p(1), p(2)}); }

Eigen::Vector3d point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw InputError("sphere points are [x, y, z] triples");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

struct Samples {
    int n = 0;
    std::vector<double> times;
    std::vector<Matrix> matrices;
};

Samples samples_from_json(const json& j, const char* key) {
    Samples out;
    out.n = field(j, "n").get<int>();
    for (const auto& s : field(j, "samples")) {
        out.times.push_back(field(s, "t").get<double>());
        out.matrices.push_back(matrix_from_json(field(s, key)));
    }
    return out;
}

}  // namespace

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string format12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

json read_file(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse(text);
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

json read_input(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse(arg);
    return read_file(arg);
}

json to_json(HalfInteger h) { return {{"num", h.numerator()}, {"den", h.denominator()}}; }

HalfInteger half_integer_from_json(const json& j) {
    return guarded("half-integer", [&] {
        if (j.is_number_integer()) return HalfInteger(j.get<int>());
        return HalfInteger::from_fraction(field(j, "num").get<int>(), field(j, "den").get<int>());
    });
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    return guarded("matrix", [&] {
        if (!j.is_array()) throw InputError("matrices are arrays of rows");
        const auto rows = static_cast<Eigen::Index>(j.size());
        const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
        Matrix m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const auto& row = j[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
                throw InputError("ragged matrix");
            for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
        }
        return m;
    });
}

json to_json(const SymplecticPath& path) {
    json samples = json::array();
    for (std::size_t i = 0; i < path.size(); ++i)
        samples.push_back({{"t", path.time(i)}, {"matrix", matrix_to_json(path.matrix(i))}});
    return {{"n", path.n()}, {"samples", std::move(samples)}};
}

SymplecticPath path_from_json(const json& j) {
    return guarded("path", [&] {
        auto s = samples_from_json(j, "matrix");
        return SymplecticPath(s.n, std::move(s.times), std::move(s.matrices));
    });
}

json to_json(const LagrangianLoop& loop) {
    json samples = json::array();
    const double step = loop.size() > 1 ? 1.0 / static_cast<double>(loop.size() - 1) : 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i)
        samples.push_back({{"t", static_cast<double>(i) * step}, {"frame", matrix_to_json(loop.frame(i))}});
    return {{"n", loop.n()}, {"samples", std::move(samples)}};
}

LagrangianLoop loop_from_json(const json& j) {
    return guarded("loop", [&] {
        auto s = samples_from_json(j, "frame");
        return LagrangianLoop(s.n, std::move(s.matrices));
    });
}

json to_json(const ModuliProblem& p) {
    json punctures = json::array();
    for (const auto& q : p.punctures)
        punctures.push_back({{"sign", q.sign == PunctureSign::positive ? "+" : "-"},
                             {"index", to_json(q.index)},
                             {"bott_dim", q.bott_dim}});
    return {{"n", p.n},
            {"punctures", std::move(punctures)},
            {"c1", p.c1},
            {"marked_points", p.marked_points},
            {"tangency_order", p.tangency_order},
            {"point_constraint", p.point_constraint},
            {"node_count", p.node_count}};
}

ModuliProblem moduli_problem_from_json(const json& j) {
    return guarded("moduli problem", [&] {
        ModuliProblem p;
        p.n = field(j, "n").get<int>();
        if (j.contains("punctures")) {
            for (const auto& q : j.at("punctures")) {
                PunctureSpec spec;
                const auto sign = field(q, "sign").get<std::string>();
                if (sign == "+" || sign == "positive") {
                    spec.sign = PunctureSign::positive;
                } else if (sign == "-" || sign == "negative") {
                    spec.sign = PunctureSign::negative;
                } else {
                    throw InputError("puncture sign must be '+' or '-', got '" + sign + "'");
                }
                spec.index = half_integer_from_json(field(q, "index"));
                spec.bott_dim = q.value("bott_dim", 0);
                p.punctures.push_back(spec);
            }
        }
        p.c1 = j.value("c1", 0);
        p.marked_points = j.value("marked_points", 0);
        p.tangency_order = j.value("tangency_order", 0);
        p.point_constraint = j.value("point_constraint", false);
        p.node_count = j.value("node_count", 0);
        p.validate();
        return p;
    });
}

json to_json(const DimensionExpansion& e) {
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back({{"term", t.label}, {"value", to_json(t.value)}});
    return {{"terms", std::move(terms)}, {"total", e.total}};
}

json to_json(const MaslovDistribution& d) { return {{"m", d.m()}, {"mu", d.mu()}}; }

json to_json(const SolutionSet& s) {
    json points = json::array();
    for (const auto& p : s.points) points.push_back(complex_vector_to_json(p));
    return {{"count", s.size()},
            {"points", std::move(points)},
            {"residuals", s.residuals},
            {"jacobian_min_sv", s.jacobian_min_sv},
            {"multiplicities", s.multiplicities}};
}

SolutionSet solution_set_from_json(const json& j) {
    return guarded("solution set", [&] {
        SolutionSet s;
        for (const auto& p : field(j, "points")) s.points.push_back(complex_vector_from_json(p));
        s.residuals = field(j, "residuals").get<std::vector<double>>();
        s.jacobian_min_sv = field(j, "jacobian_min_sv").get<std::vector<double>>();
        s.multiplicities = field(j, "multiplicities").get<std::vector<int>>();
        if (s.residuals.size() != s.size() || s.jacobian_min_sv.size() != s.size() ||
            s.multiplicities.size() != s.size())
            throw InputError("solution set arrays differ in length");
        return s;
    });
}

json to_json(const RelClass& c) {
    return {{"a_gamma", c.a_gamma}, {"a_tau", c.a_tau}, {"b", c.b}, {"symbolic", to_symbolic(c)}};
}

RelClass rel_class_from_json(const json& j) {
    return guarded("relative class", [&] {
        return RelClass{field(j, "a_gamma").get<int>(), field(j, "a_tau").get<int>(), field(j, "b").get<int>()};
    });
}

json to_json(const AsymptoticTree& t) {
    json nodes = json::array();
    for (int v = 0; v < t.node_count(); ++v) {
        json node;
        json punctures = json::array();
        for (const auto& h : t.punctures[static_cast<std::size_t>(v)]) punctures.push_back(h1_to_json(h));
        node["punctures"] = std::move(punctures);
        if (!t.totals.empty()) node["total"] = h1_to_json(t.totals[static_cast<std::size_t>(v)]);
        nodes.push_back(std::move(node));
    }
    json edges = json::array();
    for (const auto& e : t.edges)
        edges.push_back({{"a", json::array({e.node_a, e.puncture_a})}, {"b", json::array({e.node_b, e.puncture_b})}});
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"root", t.root}};
}

AsymptoticTree asymptotic_tree_from_json(const json& j) {
    return guarded("asymptotic tree", [&] {
        AsymptoticTree t;
        const auto& nodes = field(j, "nodes");
        bool any_total = false;
        for (const auto& node : nodes) any_total = any_total || node.contains("total");
        for (const auto& node : nodes) {
            std::vector<H1Class> punctures;
            for (const auto& h : field(node, "punctures")) punctures.push_back(h1_from_json(h));
            t.punctures.push_back(std::move(punctures));
            if (any_total) t.totals.push_back(h1_from_json(field(node, "total")));
        }
        for (const auto& e : field(j, "edges")) {
            const auto& a = field(e, "a");
            const auto& b = field(e, "b");
            t.edges.push_back({a.at(0).get<int>(), a.at(1).get<int>(), b.at(0).get<int>(), b.at(1).get<int>()});
        }
        t.root = j.value("root", 0);
        t.validate();
        return t;
    });
}

json to_json(const LabelledTree& t) {
    json edges = json::array();
    for (const auto& [a, b] : t.edges) edges.push_back(json::array({a, b}));
    return {{"k", t.k}, {"vertices", t.vertex_count()}, {"edges", std::move(edges)}, {"labels", t.labels}};
}

LabelledTree labelled_tree_from_json(const json& j) {
    return guarded("labelled tree", [&] {
        LabelledTree t;
        t.labels = field(j, "labels").get<std::vector<std::vector<int>>>();
        if (j.contains("vertices") && j.at("vertices").get<int>() != t.vertex_count())
            throw InputError("'vertices' disagrees with the number of label lists");
        int max_label = 0;
        for (const auto& ls : t.labels)
            for (int l : ls) max_label = std::max(max_label, l);
        t.k = j.value("k", max_label);
        for (const auto& e : field(j, "edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("edges are [alpha, beta] pairs");
            t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        t.validate();
        return t;
    });
}

json to_json(const StableDecomposition& d) { return d.parts; }

json to_json(const NodalCurve& c) {
    json marked = json::array();
    for (const auto& per_vertex : c.marked) {
        json m = json::object();
        for (const auto& [label, p] : per_vertex) m[std::to_string(label)] = point_to_json(p);
        marked.push_back(std::move(m));
    }
    json nodes = json::array();
    for (const auto& [edge, p] : c.node_points)
        nodes.push_back({{"edge", json::array({edge.first, edge.second})}, {"point", point_to_json(p)}});
    return {{"tree", to_json(c.tree)}, {"marked", std::move(marked)}, {"node_points", std::move(nodes)}};
}

NodalCurve nodal_curve_from_json(const json& j) {
    return guarded("nodal curve", [&] {
        NodalCurve c;
        c.tree = labelled_tree_from_json(field(j, "tree"));
        for (const auto& per_vertex : field(j, "marked")) {
            std::map<int, Eigen::Vector3d> m;
            for (const auto& [label, p] : per_vertex.items()) m[std::stoi(label)] = point_from_json(p);
            c.marked.push_back(std::move(m));
        }
        for (const auto& np : field(j, "node_points")) {
            const auto& e = field(np, "edge");
            c.node_points[{e.at(0).get<int>(), e.at(1).get<int>()}] = point_from_json(field(np, "point"));
        }
        return c;
    });
}

json to_json(const CylinderSolution& sol) {
    json q = json::array();
    json p = json::array();
    for (const auto& m : sol.q) q.push_back(matrix_to_json(m));
    for (const auto& m : sol.p) p.push_back(matrix_to_json(m));
    return {{"n", sol.n},      {"k", sol.k}, {"s_max", sol.s_max}, {"qbar", vector_to_json(sol.qbar)},
            {"pbar", vector_to_json(sol.pbar)}, {"s", sol.s}, {"t", sol.t}, {"q", std::move(q)},
            {"p", std::move(p)}};
}

CylinderSolution cylinder_solution_from_json(const json& j) {
    return guarded("cylinder solution", [&] {
        CylinderSolution sol;
        sol.n = field(j, "n").get<int>();
        sol.k = field(j, "k").get<int>();
        sol.s_max = field(j, "s_max").get<double>();
        sol.qbar = vector_from_json(field(j, "qbar"));
        sol.pbar = vector_from_json(field(j, "pbar"));
        sol.s = field(j, "s").get<std::vector<double>>();
        sol.t = field(j, "t").get<std::vector<double>>();
        for (const auto& m : field(j, "q")) sol.q.push_back(matrix_from_json(m));
        for (const auto& m : field(j, "p")) sol.p.push_back(matrix_from_json(m));
        if (static_cast<int>(sol.q.size()) != sol.n || static_cast<int>(sol.p.size()) != sol.n)
            throw InputError("cylinder grids must have one matrix per coordinate");
        return sol;
    });
}

std::string cylinder_csv(const CylinderSolution& sol) {
    std::string out = "s,t";
    for (int i = 1; i <= sol.n; ++i) out += ",q" + std::to_string(i);
    for (int i = 1; i <= sol.n; ++i) out += ",p" + std::to_string(i);
    out += '\n';
    for (std::size_t a = 0; a < sol.s.size(); ++a) {
        for (std::size_t b = 0; b < sol.t.size(); ++b) {
            out += format12(sol.s[a]) + ',' + format12(sol.t[b]);
            const auto ra = static_cast<Eigen::Index>(a);
            const auto cb = static_cast<Eigen::Index>(b);
            for (const auto& m : sol.q) out += ',' + format12(m(ra, cb));
            for (const auto& m : sol.p) out += ',' + format12(m(ra, cb));
            out += '\n';
        }
    }
    return out;
}

json to_json(const CheckResult& r, bool with_timing) {
    json j = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (with_timing) j["seconds"] = r.seconds;
    return j;
}

json rounded(const json& j) {
    if (j.is_number_float()) return round12(j.get<double>());
    if (j.is_array()) {
        json out = json::array();
        for (const auto& v : j) out.push_back(rounded(v));
        return out;
    }
    if (j.is_object()) {
        json out = json::object();
        for (const auto& [k, v] : j.items()) out[k] = rounded(v);
        return out;
    }
    return j;
}

std::string cell_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format12(v.get<double>());
    if (v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den")) {
        const int den = v.at("den").get<int>();
        const auto num = std::to_string(v.at("num").get<int>());
        return den == 1 ? num : num + "/" + std::to_string(den);
    }
    return rounded(v).dump();
}

void Report::add(const std::string& quantity, json value, const std::string& citation) {
    json row = {{"quantity", quantity}, {"value", std::move(value)}};
    if (!citation.empty()) row["citation"] = citation;
    rows.push_back(std::move(row));
}

json Report::to_json() const {
    json j = {{"schema_version", kSchemaVersion}, {"command", command}, {"results", rounded(rows)}};
    if (!data.empty()) j["data"] = rounded(data);
    return j;
}

std::string Report::to_table() const {
    std::vector<std::string> columns;
    for (const auto& row : rows)
        for (const auto& [key, _] : row.items())
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);

    // display width in code points; every symbol the reports use is single-width
    auto display_width = [](const std::string& s) {
        return static_cast<std::size_t>(
            std::count_if(s.begin(), s.end(), [](char ch) { return (static_cast<unsigned char>(ch) & 0xC0) != 0x80; }));
    };
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) width[c] = display_width(columns[c]);
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            line.push_back(row.contains(columns[c]) ? cell_text(row.at(columns[c])) : "");
            width[c] = std::max(width[c], display_width(line.back()));
        }
        cells.push_back(std::move(line));
    }

    auto render = [&](const std::vector<std::string>& line) {
        std::string out;
        for (std::size_t c = 0; c < line.size(); ++c) {
            out += line[c];
            if (c + 1 < line.size()) out += std::string(width[c] - display_width(line[c]) + 2, ' ');
        }
        return out + '\n';
    };
    std::string out = render(columns);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    out += render(rule);
    for (const auto& line : cells) out += render(line);
    return out;
}

}  // namespace lagcap::io
