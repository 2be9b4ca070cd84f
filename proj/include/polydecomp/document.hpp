#pragma once

#include "polydecomp/center.hpp"
#include "polydecomp/decompose.hpp"
#include "polydecomp/instancegen.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace polydecomp {

inline constexpr const char *tool_version = "0.1.0";
inline constexpr int schema_version = 1;

/// Text problem format: a `vars: a b c` line, then one polynomial per
/// nonempty line. `#` starts a comment.
struct ProblemFile {
    std::vector<std::string> vars;
    std::vector<std::string> sources;

    std::vector<Polynomial> polynomials() const;
};

/// Throws ParseError; positions refer to the whole text.
ProblemFile parse_problem(std::string_view text);
ProblemFile read_problem_file(const std::filesystem::path &path);
std::string format_problem(const ProblemFile &problem, std::string_view header_comment = {});

/// Names of the transformed variables: y1..yn.
std::vector<std::string> output_variable_names(std::size_t n);

nlohmann::json matrix_to_json(const RatMatrix &m);
RatMatrix matrix_from_json(const nlohmann::json &j);

nlohmann::json center_document(const ProblemFile &problem, const CenterBasis &z);
nlohmann::json result_document(const ProblemFile &problem, const DecompositionResult &r);

/// Rebuilds the result from a document produced by result_document. Leaf
/// polynomials are parsed back with the output variable names. Throws
/// ParseError on schema problems.
DecompositionResult result_from_document(const nlohmann::json &doc);

/// Human-readable report: verdict, blocks, change of variables and, per
/// polynomial, the blockwise sum f_i(Py) = g_i1 + g_i2 + ...
std::string text_report(const ProblemFile &problem, const DecompositionResult &r);

nlohmann::json planted_truth_document(const PlantedInstance &inst);

} // namespace polydecomp
