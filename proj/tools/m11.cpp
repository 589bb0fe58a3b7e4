#include "m11/classify.hpp"
#include "m11/generic.hpp"
#include "m11/ncparse.hpp"
#include "m11/serialize.hpp"
#include "m11/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace m11;

namespace {

bool in_span(const std::vector<PolyVector>& generators, const PolyVector& v)
{
    if (generators.empty())
        return false;
    try {
        solve_in_polys(columns_matrix(2, generators), v);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

PolyVector negated(PolyVector v)
{
    for (auto& e : v)
        e = -e;
    return v;
}

// How the kernel relates to h1..h4 in its component.
std::string kernel_match(int component, const KernelBasis& kb)
{
    switch (component) {
    case 0:
    case 1:
        return kb.rank() == 0 ? "empty, as expected" : "MISMATCH: expected an empty kernel";
    case 2: {
        if (kb.rank() != 1)
            return "MISMATCH: expected rank 1";
        const auto& g = kb.vectors.front();
        if (g == h_coordinates(4))
            return "generator = +h4";
        if (g == negated(h_coordinates(4)))
            return "generator = -h4";
        return "MISMATCH: generator is not +-h4";
    }
    case 3: {
        std::vector<PolyVector> h23 = {h_coordinates(2), h_coordinates(3)};
        bool forward = in_span(kb.vectors, h23[0]) && in_span(kb.vectors, h23[1]);
        bool back = true;
        for (const auto& g : kb.vectors)
            back = back && in_span(h23, g);
        return forward && back ? "span = span{h2, h3}" : "MISMATCH: span differs from span{h2, h3}";
    }
    default: {
        bool ok = in_span(kb.vectors, h_coordinates(1)) && kb.rank() == 1 && in_span({h_coordinates(1)}, kb.vectors.front());
        return ok ? "span = K[X] h1" : "MISMATCH: span differs from K[X] h1";
    }
    }
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict central_verdict(const SuperMatrix& m, int k)
{
    if (k == 2)
        return verdict_of_matrix(m);
    if (!is_central(m, k))
        return {Centrality::not_central, "does not commute with every generator"};
    return {Centrality::central, ""};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in the generic algebra of 2x2 supermatrices"};
    app.require_subcommand(1);

    int k = 2;
    std::string format = "text";
    std::string expr;

    auto* eval = app.add_subcommand("eval", "Evaluate an expression at t_r -> C_r");
    eval->add_option("-k", k, "Number of generators")->check(CLI::Range(1, kMaxGenerators));
    eval->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    eval->add_option("expr", expr, "Expression, e.g. \"[t1,t2]^2\"")->required();

    auto* central = app.add_subcommand("central", "Decide whether an expression is central");
    central->add_option("-k", k, "Number of generators")->check(CLI::Range(1, kMaxGenerators));
    central->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    central->add_option("expr", expr, "Expression")->required();

    int component = 0;
    auto* kernel = app.add_subcommand("kernel", "Common annihilator in one Z-degree");
    kernel->add_option("--component", component, "Z-degree 0..4")->required()->check(CLI::Range(0, 4));
    kernel->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string suite = "all";
    std::uint64_t seed = 42;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "Run verification checks");
    verify->add_option("--suite", suite, "Check name or 'all'");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--timings", timings, "Include elapsed times");
    bool list = false;
    verify->add_flag("--list", list, "List check names and exit");

    std::string file;
    bool direct = false;
    auto* classify_cmd = app.add_subcommand("classify", "Structural centre test of a canonical element file");
    classify_cmd->add_option("file", file, "Input file, '-' for stdin")->required();
    classify_cmd->add_flag("--direct", direct, "Also evaluate and test directly");
    classify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends report success; every usage error maps to 2
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) {
            SuperMatrix m = evaluate(parse(expr), k);
            std::cout << (format == "json" ? to_json(m).dump(2) + "\n" : m.str());
            return 0;
        }
        if (*central) {
            SuperMatrix m = evaluate(parse(expr), k);
            Verdict v = central_verdict(m, k);
            nlohmann::json j = to_json(v);
            std::string text = to_string(v.kind) + (v.witness.empty() ? "" : " (" + v.witness + ")") + "\n";
            if (k == 2 && v.kind != Centrality::not_central) {
                CentralDecomposition d = central_decompose(m);
                j["decomposition"] = {{"a", to_json(d.a)}, {"f1", to_json(d.f1)}, {"f4", to_json(d.f4)}};
                text += "a = " + d.a.str() + "\nf1 = " + d.f1.str() + "\nf4 = " + d.f4.str() + "\n";
            }
            std::cout << (format == "json" ? j.dump(2) + "\n" : text);
            return 0;
        }
        if (*kernel) {
            KernelBasis kb = annihilator_J(component);
            std::string match = kernel_match(component, kb);
            if (format == "json") {
                nlohmann::json j = to_json(kb);
                j["component"] = component;
                j["match"] = match;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "component " << component << ": rank " << kb.rank() << " in dimension " << kb.dimension
                          << "\n";
                auto basis = odd_basis(component, 2);
                for (std::size_t i = 0; i < kb.vectors.size(); ++i) {
                    std::cout << "generator " << i + 1 << ":";
                    for (std::size_t j = 0; j < basis.size(); ++j) {
                        std::string mono;
                        for (int b = 0; b < 4; ++b)
                            if (basis[j] & (OddMask{1} << b))
                                mono += (mono.empty() ? "" : "*") + odd_name(b, 2);
                        std::cout << (j ? ", " : " ") << (mono.empty() ? "1" : mono) << ": " << kb.vectors[i][j].str();
                    }
                    std::cout << "\n";
                }
                std::cout << "match: " << match << "\n";
            }
            return match.rfind("MISMATCH", 0) == 0 ? 1 : 0;
        }
        if (*verify) {
            if (list) {
                for (const auto& n : suite_names())
                    std::cout << n << "\n";
                return 0;
            }
            Report r = run_suite(suite, seed);
            std::cout << (format == "json" ? r.json(timings).dump(2) + "\n" : r.text(timings));
            return r.passed() ? 0 : 1;
        }
        if (*classify_cmd) {
            CanonicalElement ce = parse_canonical(read_input(file));
            Verdict v = classify(ce);
            nlohmann::json j = to_json(v);
            std::string text = to_string(v.kind) + (v.witness.empty() ? "" : " (" + v.witness + ")") + "\n";
            int status = 0;
            if (direct) {
                Verdict d = verdict_of_matrix(expand_canonical(ce));
                j["direct"] = to_string(d.kind);
                text += "direct evaluation: " + to_string(d.kind) + "\n";
                status = d.kind == v.kind ? 0 : 1;
            }
            std::cout << (format == "json" ? j.dump(2) + "\n" : text);
            return status;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
