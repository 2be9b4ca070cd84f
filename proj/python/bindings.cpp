#include "polydecomp/center.hpp"
#include "polydecomp/decompose.hpp"
#include "polydecomp/document.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/instancegen.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace polydecomp;

namespace {

ProblemFile problem_from(const std::vector<std::string> &polys, const std::vector<std::string> &vars) {
    ProblemFile p;
    p.vars = vars;
    p.sources = polys;
    validate_variable_names(p.vars);
    if (p.sources.empty())
        throw EmptyInput("no polynomials given");
    return p;
}

// Documents cross the boundary as JSON text; the Python side decodes them.
std::string center_json(const std::vector<std::string> &polys, const std::vector<std::string> &vars) {
    const ProblemFile p = problem_from(polys, vars);
    return center_document(p, center_basis(p.polynomials())).dump();
}

std::string decompose_json(const std::vector<std::string> &polys, const std::vector<std::string> &vars,
                           std::uint64_t seed, int max_tries) {
    const ProblemFile p = problem_from(polys, vars);
    const auto fs = p.polynomials();
    const DecompositionResult r = decompose_recursive(fs, seed, max_tries);
    if (auto v = verify_decomposition(fs, r); !v)
        throw InternalInvariantViolation("result failed self-verification: " + v.reason);
    return result_document(p, r).dump();
}

std::pair<bool, std::string> verify_json(const std::vector<std::string> &polys, const std::vector<std::string> &vars,
                                         const std::string &result) {
    const ProblemFile p = problem_from(polys, vars);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(result);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    const VerifyOutcome v = verify_decomposition(p.polynomials(), result_from_document(doc));
    return {v.ok, v.reason};
}

std::pair<std::vector<std::string>, std::string> generate_json(std::uint64_t seed, std::size_t n, std::size_t m,
                                                               const std::vector<std::size_t> &blocks,
                                                               std::uint32_t max_degree) {
    const PlantedInstance inst = generate(seed, n, m, blocks, max_degree);
    const auto vars = default_variable_names(n, "x");
    std::vector<std::string> polys;
    for (const auto &f : inst.fs)
        polys.push_back(render_canonical(f, vars));
    return {polys, planted_truth_document(inst).dump()};
}

std::string canonical(const std::string &poly, const std::vector<std::string> &vars) {
    return render_canonical(parse_polynomial(poly, vars), vars);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact simultaneous direct sum decomposition of polynomials";
    m.attr("__version__") = tool_version;

    auto base = py::register_exception<Error>(m, "PolydecompError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InternalInvariantViolation>(m, "InternalError", base.ptr());

    m.def("canonical", &canonical, py::arg("poly"), py::arg("vars"));
    m.def("center_json", &center_json, py::arg("polys"), py::arg("vars"));
    m.def("decompose_json", &decompose_json, py::arg("polys"), py::arg("vars"), py::arg("seed") = 42,
          py::arg("max_tries") = default_max_tries);
    m.def("verify_json", &verify_json, py::arg("polys"), py::arg("vars"), py::arg("result"));
    m.def("generate_json", &generate_json, py::arg("seed"), py::arg("n"), py::arg("m"), py::arg("blocks"),
          py::arg("max_degree"));
}
