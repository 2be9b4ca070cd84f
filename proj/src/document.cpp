#include "polydecomp/document.hpp"

#include "polydecomp/errors.hpp"
#include "polydecomp/ratlinalg.hpp"

#include <fstream>
#include <sstream>

namespace polydecomp {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

json node_to_json(const DecompositionNode &node, const std::vector<std::string> &names) {
    json j;
    j["variables"] = node.variable_indices;
    j["center_dim"] = node.center_dim;
    if (node.is_leaf()) {
        std::vector<std::string> local;
        for (auto v : node.variable_indices)
            local.push_back(names.at(v));
        json polys = json::array();
        for (const auto &p : node.polys)
            polys.push_back(render_canonical(p, local));
        j["polys"] = std::move(polys);
        j["children"] = json::array();
        return j;
    }
    j["transform"] = matrix_to_json(node.local_transform);
    json eps = json::array();
    for (const auto &e : node.idempotents.eps)
        eps.push_back(matrix_to_json(e));
    j["idempotents"] = std::move(eps);
    json children = json::array();
    for (const auto &c : node.children)
        children.push_back(node_to_json(c, names));
    j["children"] = std::move(children);
    return j;
}

DecompositionNode node_from_json(const json &j, const std::vector<std::string> &names) {
    DecompositionNode node;
    node.variable_indices = j.at("variables").get<std::vector<std::size_t>>();
    node.center_dim = j.at("center_dim").get<std::size_t>();
    const std::size_t k = node.variable_indices.size();
    for (const auto &c : j.at("children"))
        node.children.push_back(node_from_json(c, names));
    if (node.children.empty()) {
        std::vector<std::string> local;
        for (auto v : node.variable_indices) {
            if (v >= names.size())
                throw ParseError("leaf variable index out of range", 0);
            local.push_back(names[v]);
        }
        for (const auto &p : j.at("polys"))
            node.polys.push_back(parse_polynomial(p.get<std::string>(), local));
        node.local_transform = RatMatrix::identity(k);
        return node;
    }
    node.local_transform = matrix_from_json(j.at("transform"));
    node.idempotents.n = k;
    for (const auto &e : j.at("idempotents"))
        node.idempotents.eps.push_back(matrix_from_json(e));
    return node;
}

json basis_to_json(const std::vector<RatMatrix> &ms) {
    json out = json::array();
    for (const auto &m : ms)
        out.push_back(matrix_to_json(m));
    return out;
}

json header(const ProblemFile &problem, const char *kind) {
    json doc;
    doc["schema"] = kind;
    doc["schema_version"] = schema_version;
    doc["version"] = tool_version;
    doc["vars"] = problem.vars;
    json inputs = json::array();
    for (const auto &p : problem.polynomials())
        inputs.push_back(render_canonical(p, problem.vars));
    doc["inputs"] = std::move(inputs);
    return doc;
}

} // namespace

std::vector<Polynomial> ProblemFile::polynomials() const {
    std::vector<Polynomial> out;
    for (const auto &s : sources)
        out.push_back(parse_polynomial(s, vars));
    return out;
}

ProblemFile parse_problem(std::string_view text) {
    ProblemFile problem;
    bool have_vars = false;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        std::size_t eol = text.find('\n', offset);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(offset, eol - offset);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::string content = trim(line);
        if (!content.empty()) {
            if (!have_vars) {
                if (content.rfind("vars:", 0) != 0)
                    throw ParseError("expected 'vars:' line before polynomials", offset);
                std::istringstream is(content.substr(5));
                std::string name;
                while (is >> name)
                    problem.vars.push_back(name);
                try {
                    validate_variable_names(problem.vars);
                } catch (const InvalidArgument &e) {
                    throw ParseError(e.what(), offset);
                }
                have_vars = true;
            } else {
                try {
                    parse_polynomial(content, problem.vars);
                } catch (const ParseError &e) {
                    const std::size_t lead = line.find_first_not_of(" \t");
                    throw ParseError(std::string("line '") + content + "': " + e.what(),
                                     offset + (lead == std::string_view::npos ? 0 : lead) + e.position());
                }
                problem.sources.push_back(content);
            }
        }
        offset = eol + 1;
    }
    if (!have_vars)
        throw ParseError("missing 'vars:' line", 0);
    if (problem.sources.empty())
        throw ParseError("no polynomials given", text.size());
    return problem;
}

ProblemFile read_problem_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path.string() + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

std::string format_problem(const ProblemFile &problem, std::string_view header_comment) {
    std::ostringstream os;
    if (!header_comment.empty())
        os << "# " << header_comment << '\n';
    os << "vars:";
    for (const auto &v : problem.vars)
        os << ' ' << v;
    os << '\n';
    for (const auto &s : problem.sources)
        os << s << '\n';
    return os.str();
}

std::vector<std::string> output_variable_names(std::size_t n) { return default_variable_names(n, "y"); }

json matrix_to_json(const RatMatrix &m) { return m.to_strings(); }

RatMatrix matrix_from_json(const json &j) {
    try {
        return RatMatrix::from_strings(j.get<std::vector<std::vector<std::string>>>());
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad matrix: ") + e.what(), 0);
    }
}

json center_document(const ProblemFile &problem, const CenterBasis &z) {
    json doc = header(problem, "polydecomp.center");
    doc["center_dim"] = z.dim();
    doc["center_basis"] = basis_to_json(z.basis);
    return doc;
}

json result_document(const ProblemFile &problem, const DecompositionResult &r) {
    json doc = header(problem, "polydecomp.result");
    const std::size_t n = r.P.rows();
    const auto names = output_variable_names(n);
    const auto polys = problem.polynomials();
    const CenterBasis z = center_basis(polys);
    doc["seed"] = r.seed;
    doc["max_tries"] = r.max_tries;
    doc["output_vars"] = names;
    doc["center_dim"] = z.dim();
    doc["center_basis"] = basis_to_json(z.basis);
    doc["idempotents"] = r.tree.is_leaf() ? basis_to_json({RatMatrix::identity(n)})
                                          : basis_to_json(r.tree.idempotents.eps);
    doc["P"] = matrix_to_json(r.P);
    doc["P_inverse"] = matrix_to_json(invert(r.P));
    doc["tree"] = node_to_json(r.tree, names);
    doc["leaf_sizes"] = leaf_sizes(r.tree);
    doc["diagonalizable"] = r.diagonalizable;
    doc["decomposable"] = !r.tree.is_leaf();
    doc["verdict"] = describe(verdict(r));
    return doc;
}

DecompositionResult result_from_document(const json &doc) {
    try {
        if (doc.at("schema").get<std::string>() != "polydecomp.result")
            throw ParseError("not a decomposition result document", 0);
        if (doc.at("schema_version").get<int>() != schema_version)
            throw ParseError("unsupported schema_version", 0);
        DecompositionResult r;
        r.P = matrix_from_json(doc.at("P"));
        const auto names = doc.at("output_vars").get<std::vector<std::string>>();
        r.tree = node_from_json(doc.at("tree"), names);
        r.diagonalizable = doc.at("diagonalizable").get<bool>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.max_tries = doc.at("max_tries").get<int>();
        return r;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed result document: ") + e.what(), 0);
    }
}

std::string text_report(const ProblemFile &problem, const DecompositionResult &r) {
    const auto polys = problem.polynomials();
    const std::size_t n = r.P.rows();
    const auto names = output_variable_names(n);
    std::ostringstream os;
    os << "polynomials: " << polys.size() << " in " << n << " variables\n";
    os << "center dimension: " << r.tree.center_dim << '\n';
    os << "verdict: " << describe(verdict(r)) << '\n';
    os << "blocks:";
    const auto ls = leaves(r.tree);
    for (const auto *l : ls) {
        os << " {";
        for (std::size_t k = 0; k < l->variable_indices.size(); ++k)
            os << (k ? ", " : "") << names[l->variable_indices[k]];
        os << '}';
    }
    os << "\ndiagonalizable: " << (r.diagonalizable ? "yes" : "no") << '\n';
    os << "change of variables:\n";
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial form(n);
        for (std::size_t j = 0; j < n; ++j)
            form.add_term(Monomial::variable(n, j), r.P(i, j));
        os << "  " << problem.vars[i] << " = " << render_canonical(form, names) << '\n';
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        os << "f" << (i + 1) << "(Py) = ";
        for (std::size_t j = 0; j < ls.size(); ++j) {
            std::vector<std::string> local;
            for (auto v : ls[j]->variable_indices)
                local.push_back(names[v]);
            os << (j ? " + " : "") << '[' << render_canonical(ls[j]->polys[i], local) << ']';
        }
        os << '\n';
    }
    return os.str();
}

json planted_truth_document(const PlantedInstance &inst) {
    json doc;
    doc["schema"] = "polydecomp.planted";
    doc["schema_version"] = schema_version;
    doc["version"] = tool_version;
    doc["seed"] = inst.seed;
    doc["Q"] = matrix_to_json(inst.Q);
    doc["planted_blocks"] = inst.planted_blocks;
    json blocks = json::array();
    for (std::size_t j = 0; j < inst.block_polys.size(); ++j) {
        const auto local = default_variable_names(inst.planted_blocks[j], "z");
        json polys = json::array();
        for (const auto &p : inst.block_polys[j])
            polys.push_back(render_canonical(p, local));
        blocks.push_back(std::move(polys));
    }
    doc["block_polys"] = std::move(blocks);
    return doc;
}

} // namespace polydecomp
