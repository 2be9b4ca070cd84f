#include "cli.hpp"

#include "polydecomp/document.hpp"
#include "polydecomp/errors.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace polydecomp::cli {

namespace {

struct Options {
    std::string input;
    std::string result;
    std::string output;
    std::uint64_t seed = 42;
    int max_tries = default_max_tries;
    bool json = false;
    bool text = false;
    std::size_t n = 0;
    std::size_t m = 1;
    std::string blocks;
    std::uint32_t max_degree = 3;
};

void emit(const Options &opt, const std::string &payload, std::ostream &out) {
    if (opt.output.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(opt.output);
    if (!f)
        throw ParseError("cannot write '" + opt.output + "'", 0);
    f << payload;
}

nlohmann::json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'", 0);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what(), e.byte);
    }
}

int cmd_center(const Options &opt, std::ostream &out) {
    const ProblemFile problem = read_problem_file(opt.input);
    const CenterBasis z = center_basis(problem.polynomials());
    if (opt.json) {
        emit(opt, center_document(problem, z).dump(2) + "\n", out);
        return ok;
    }
    std::ostringstream os;
    os << "center dimension: " << z.dim() << '\n';
    for (std::size_t k = 0; k < z.dim(); ++k)
        os << "X" << (k + 1) << " = " << to_string(z.basis[k]) << '\n';
    emit(opt, os.str(), out);
    return ok;
}

int cmd_decompose(const Options &opt, std::ostream &out) {
    const ProblemFile problem = read_problem_file(opt.input);
    const auto polys = problem.polynomials();
    const DecompositionResult r = decompose_recursive(polys, opt.seed, opt.max_tries);
    if (auto v = verify_decomposition(polys, r); !v)
        throw InternalInvariantViolation("result failed self-verification: " + v.reason);
    if (opt.json)
        emit(opt, result_document(problem, r).dump(2) + "\n", out);
    else
        emit(opt, text_report(problem, r), out);
    return ok;
}

int cmd_verify(const Options &opt, std::ostream &out) {
    const ProblemFile problem = read_problem_file(opt.input);
    const DecompositionResult r = result_from_document(read_json(opt.result));
    const VerifyOutcome v = verify_decomposition(problem.polynomials(), r);
    if (v) {
        out << "PASS\n";
        return ok;
    }
    out << "FAIL: " << v.reason << '\n';
    return verify_failed;
}

std::vector<std::size_t> parse_blocks(const std::string &text, std::size_t n) {
    if (text.empty())
        return {n};
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            sizes.push_back(v);
        } catch (const std::exception &) {
            throw ParseError("bad block size '" + item + "'", 0);
        }
    }
    return sizes;
}

int cmd_generate(const Options &opt, std::ostream &out) {
    const auto blocks = parse_blocks(opt.blocks, opt.n);
    const PlantedInstance inst = generate(opt.seed, opt.n, opt.m, blocks, opt.max_degree);
    ProblemFile problem;
    problem.vars = default_variable_names(opt.n, "x");
    for (const auto &f : inst.fs)
        problem.sources.push_back(render_canonical(f, problem.vars));
    std::ostringstream header;
    header << "planted instance seed=" << opt.seed << " blocks=";
    for (std::size_t j = 0; j < blocks.size(); ++j)
        header << (j ? "," : "") << blocks[j];
    emit(opt, format_problem(problem, header.str()), out);
    if (!opt.output.empty()) {
        std::ofstream truth(opt.output + ".truth.json");
        truth << planted_truth_document(inst).dump(2) << '\n';
    }
    return ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simultaneous direct sum decomposition of multivariate polynomials", "polydecomp"};
    app.require_subcommand(1);
    Options opt;

    auto *center = app.add_subcommand("center", "Compute the center algebra of a problem file");
    center->add_option("--input", opt.input, "Problem file")->required();
    center->add_flag("--json", opt.json, "Emit JSON");
    center->add_option("--output", opt.output, "Write to this path instead of stdout");

    auto *decompose = app.add_subcommand("decompose", "Decompose a problem file recursively");
    decompose->add_option("--input", opt.input, "Problem file")->required();
    decompose->add_option("--seed", opt.seed, "Random seed for idempotent search")->capture_default_str();
    decompose->add_option("--max-tries", opt.max_tries, "Random draws per idempotent split")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    auto *json_flag = decompose->add_flag("--json", opt.json, "Emit the JSON result document");
    decompose->add_flag("--text", opt.text, "Emit a text report (default)")->excludes(json_flag);
    decompose->add_option("--output", opt.output, "Write to this path instead of stdout");

    auto *verify = app.add_subcommand("verify", "Check a serialized result against its problem");
    verify->add_option("--input", opt.input, "Problem file")->required();
    verify->add_option("--result", opt.result, "Result JSON document")->required();

    auto *gen = app.add_subcommand("generate", "Generate a planted decomposable instance");
    gen->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
    gen->add_option("--n", opt.n, "Number of variables")->required();
    gen->add_option("--m", opt.m, "Number of polynomials")->capture_default_str();
    gen->add_option("--blocks", opt.blocks, "Comma-separated block sizes (default: one block)");
    gen->add_option("--max-degree", opt.max_degree, "Maximum degree (>= 3)")->capture_default_str();
    gen->add_option("--output", opt.output, "Problem file path; ground truth goes to PATH.truth.json");

    std::vector<std::string> argv_storage{"polydecomp"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (center->parsed())
            return cmd_center(opt, out);
        if (decompose->parsed())
            return cmd_decompose(opt, out);
        if (verify->parsed())
            return cmd_verify(opt, out);
        return cmd_generate(opt, out);
    } catch (const InternalInvariantViolation &e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    } catch (const MixedMonomial &e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
}

} // namespace polydecomp::cli
