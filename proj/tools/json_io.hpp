#pragma once

// JSON encoding of the library types and the report format of the command-line tool.

#include <string>

#include "json.hpp"
#include "lagcap/chekanov.hpp"
#include "lagcap/cylinders.hpp"
#include "lagcap/dm_trees.hpp"
#include "lagcap/enumerative.hpp"
#include "lagcap/half_integer.hpp"
#include "lagcap/moduli_dims.hpp"
#include "lagcap/symplectic_index.hpp"
#include "lagcap/verify.hpp"

namespace lagcap::io {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// x rounded to 12 significant digits (non-finite values pass through).
double round12(double x);
/// "%.12g"
std::string format12(double x);

/// Parses text or throws InputError with the parser message.
json parse(const std::string& text);
/// Reads and parses a file; `-` reads stdin.
json read_file(const std::string& path);
/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
json read_input(const std::string& arg);

json to_json(HalfInteger h);
HalfInteger half_integer_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const SymplecticPath& path);
SymplecticPath path_from_json(const json& j);
json to_json(const LagrangianLoop& loop);
LagrangianLoop loop_from_json(const json& j);

json to_json(const ModuliProblem& p);
ModuliProblem moduli_problem_from_json(const json& j);
json to_json(const DimensionExpansion& e);
json to_json(const MaslovDistribution& d);

json to_json(const SolutionSet& s);
SolutionSet solution_set_from_json(const json& j);

json to_json(const RelClass& c);
RelClass rel_class_from_json(const json& j);
json to_json(const AsymptoticTree& t);
AsymptoticTree asymptotic_tree_from_json(const json& j);

json to_json(const LabelledTree& t);
LabelledTree labelled_tree_from_json(const json& j);
json to_json(const StableDecomposition& d);
json to_json(const NodalCurve& c);
NodalCurve nodal_curve_from_json(const json& j);

json to_json(const CylinderSolution& sol);
CylinderSolution cylinder_solution_from_json(const json& j);
std::string cylinder_csv(const CylinderSolution& sol);

/// Timing is left out unless asked for, so that reports stay reproducible.
json to_json(const CheckResult& r, bool with_timing = false);

/// Rounds every floating-point number in j to 12 significant digits.
json rounded(const json& j);

/// Cell text: strings verbatim, numbers at 12 digits, {num, den} as a fraction,
/// everything else as compact JSON.
std::string cell_text(const json& v);

/// A command's output: rows of named columns, one computed quantity per row.
struct Report {
    std::string command;
    json rows = json::array();
    json data = json::object();  // bulky payloads, JSON output only

    void add(json row) { rows.push_back(std::move(row)); }
    void add(const std::string& quantity, json value, const std::string& citation = "");

    json to_json() const;
    /// Column headers are the keys of the rows in first-seen order.
    std::string to_table() const;
};

}  // namespace lagcap::io
