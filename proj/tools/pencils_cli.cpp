// Command line front end: classify pencils, decide orbit-closure inclusion and
// component membership, build generic pencils, construct and sample rank-one
// decompositions, verify component dimensions, export closure orders.
//
// JSON goes to stdout, human summaries to stderr. Exit codes: 0 success,
// 1 malformed input, 2 violated precondition.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pencils/decomp.hpp"
#include "pencils/errors.hpp"
#include "pencils/io.hpp"
#include "pencils/strata.hpp"

namespace {

using pencils::json;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string list_text(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    return s + "]";
}

std::string node_name(const std::string& path) {
    std::string base = path;
    const std::size_t slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    if (base.size() > 5 && base.compare(base.size() - 5, 5, ".json") == 0)
        base.resize(base.size() - 5);
    return base;
}

int run(int argc, char** argv) {
    CLI::App app{"Kronecker invariants, orbit-closure order and rank-one decompositions of matrix pencils"};
    app.require_subcommand(1);

    // classify
    std::string classify_file;
    CLI::App* classify = app.add_subcommand("classify", "Kronecker structure of a pencil");
    classify->add_option("pencil", classify_file, "pencil JSON file")->required();

    // include
    std::string inc_p, inc_q;
    CLI::App* include = app.add_subcommand("include", "does the orbit closure of P contain Q");
    include->add_option("P", inc_p, "pencil JSON file")->required();
    include->add_option("Q", inc_q, "pencil JSON file")->required();

    // components
    std::string comp_file;
    int comp_r = 0;
    CLI::App* components = app.add_subcommand("components", "components C_a^r containing the pencil");
    components->add_option("pencil", comp_file, "pencil JSON file")->required();
    components->add_option("--r", comp_r, "bounding rank r")->required();

    // generic
    int g_m = 0, g_n = 0, g_r = 0, g_a = 0;
    CLI::App* generic = app.add_subcommand("generic", "generic pencil of a component");
    generic->add_option("--m", g_m)->required();
    generic->add_option("--n", g_n)->required();
    generic->add_option("--r", g_r)->required();
    generic->add_option("--a", g_a)->required();

    // decompose
    std::string dec_file;
    int d_m = 0, d_n = 0, d_r = 0, d_a = 0;
    CLI::App* decompose = app.add_subcommand("decompose", "rank-one witness decomposition of a canonical form");
    decompose->add_option("form", dec_file, "canonical form JSON file")->required();
    decompose->add_option("--m", d_m)->required();
    decompose->add_option("--n", d_n)->required();
    decompose->add_option("--r", d_r)->required();
    decompose->add_option("--a", d_a)->required();

    // sample
    int s_m = 0, s_n = 0, s_r = 0, s_a = 0, s_height = 0;
    std::uint64_t s_seed = 0;
    CLI::App* sample = app.add_subcommand("sample", "random pencil of a component with its decomposition");
    sample->add_option("--m", s_m)->required();
    sample->add_option("--n", s_n)->required();
    sample->add_option("--r", s_r)->required();
    sample->add_option("--a", s_a)->required();
    sample->add_option("--seed", s_seed)->required();
    sample->add_option("--height", s_height)->required();

    // dim
    int q_m = 0, q_n = 0, q_r = 0, q_a = 0, q_trials = 3;
    std::uint64_t q_seed = 0;
    bool q_verify = false;
    CLI::App* dim = app.add_subcommand("dim", "dimension of a component");
    dim->add_option("--m", q_m)->required();
    dim->add_option("--n", q_n)->required();
    dim->add_option("--r", q_r)->required();
    dim->add_option("--a", q_a)->required();
    dim->add_flag("--verify", q_verify, "check against the exact Jacobian rank");
    dim->add_option("--trials", q_trials, "random points for --verify (default 3)");
    dim->add_option("--seed", q_seed, "seed for --verify (default 0)");

    // hasse
    std::vector<std::string> h_files;
    std::string h_out;
    CLI::App* hasse = app.add_subcommand("hasse", "DOT graph of the strict closure-inclusion order");
    hasse->add_option("pencils", h_files, "pencil JSON files")->required()->expected(-1);
    hasse->add_option("--out", h_out, "output DOT file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints usage or the flag error
        return code == 0 ? 0 : 1;
    }

    if (*classify) {
        const pencils::Pencil p = pencils::pencil_from_json(pencils::load_json_file(classify_file));
        const pencils::KroneckerStructure s = pencils::kronecker_structure(p);
        emit(pencils::structure_to_json(s));
        std::cerr << p.m << "x" << p.n << " pencil: normal rank " << s.nrank << ", right indices "
                  << list_text(s.right) << ", left indices " << list_text(s.left) << ", "
                  << s.finite.size() << " finite class(es), infinite part " << list_text(s.infinite)
                  << "\n";
    } else if (*include) {
        const pencils::Pencil p = pencils::pencil_from_json(pencils::load_json_file(inc_p));
        const pencils::Pencil q = pencils::pencil_from_json(pencils::load_json_file(inc_q));
        const pencils::InclusionVerdict v = pencils::closure_includes(p, q);
        emit(pencils::verdict_to_json(v));
        std::cerr << "orbit closure of P contains Q: " << (v.included ? "yes" : "no");
        if (v.witness) {
            std::cerr << " (condition " << v.witness->condition << " fails at prefix "
                      << v.witness->prefix;
            if (v.witness->eigenvalue) std::cerr << ", class " << *v.witness->eigenvalue;
            std::cerr << ")";
        }
        std::cerr << "\n";
    } else if (*components) {
        const pencils::Pencil q = pencils::pencil_from_json(pencils::load_json_file(comp_file));
        const std::vector<int> as = pencils::components_of(q, comp_r);
        json j;
        j["r"] = comp_r;
        j["components"] = as;
        emit(j);
        std::cerr << "contained in " << as.size() << " component(s) at rank " << comp_r << ": a in "
                  << list_text(as) << "\n";
    } else if (*generic) {
        const pencils::ComponentId c{g_m, g_n, g_r, g_a};
        emit(pencils::pencil_to_json(pencils::generic_pencil(c)));
        std::cerr << "generic pencil of C_" << g_a << "^" << g_r << " in " << g_m << "x" << g_n << "\n";
    } else if (*decompose) {
        const pencils::CanonicalForm cf =
            pencils::canonical_form_from_json(pencils::load_json_file(dec_file));
        const pencils::ComponentId c{d_m, d_n, d_r, d_a};
        const pencils::DegreePatternDecomposition d = pencils::witness_decomposition(cf, c);
        emit(pencils::decomposition_to_json(d));
        std::cerr << d.terms.size() << " rank-one terms, first " << d.a << " with constant u\n";
    } else if (*sample) {
        const pencils::ComponentId c{s_m, s_n, s_r, s_a};
        const pencils::SampleResult res = pencils::sample_component(c, s_seed, s_height);
        json j;
        j["pencil"] = pencils::pencil_to_json(res.pencil);
        j["decomposition"] = pencils::decomposition_to_json(res.decomposition);
        emit(j);
        std::cerr << "sampled " << s_m << "x" << s_n << " pencil from C_" << s_a << "^" << s_r
                  << " (seed " << s_seed << ", height " << s_height << ")\n";
    } else if (*dim) {
        const pencils::ComponentId c{q_m, q_n, q_r, q_a};
        json j;
        j["dimension"] = pencils::dimension(c);
        if (q_verify) {
            const pencils::DimensionCheck chk = pencils::verify_dimension(c, q_trials, q_seed);
            j["verified"] = chk.ok;
            j["max_rank"] = chk.max_rank;
        }
        emit(j);
        std::cerr << "dim C_" << q_a << "^" << q_r << " = " << pencils::dimension(c);
        if (q_verify) std::cerr << (j["verified"].get<bool>() ? " (verified)" : " (VERIFICATION FAILED)");
        std::cerr << "\n";
    } else if (*hasse) {
        std::vector<std::pair<std::string, pencils::Pencil>> named;
        for (const std::string& f : h_files)
            named.emplace_back(node_name(f), pencils::pencil_from_json(pencils::load_json_file(f)));
        const std::string dot = pencils::hasse_export(named);
        std::ofstream out(h_out);
        if (!out) throw pencils::PreconditionError("cannot write output file: " + h_out);
        out << dot;
        out.close();
        int edges = 0;
        for (std::size_t k = 0; k + 1 < dot.size(); ++k)
            if (dot[k] == '-' && dot[k + 1] == '>') ++edges;
        json j;
        j["out"] = h_out;
        j["nodes"] = named.size();
        j["edges"] = edges;
        emit(j);
        std::cerr << "wrote " << h_out << " (" << named.size() << " nodes, " << edges << " edges)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pencils::MembershipError& e) {
        json j;
        j["error"] = e.what();
        j["witness"] = pencils::verdict_to_json(e.verdict);
        emit(j);
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const pencils::ParseError& e) {
        json j;
        j["error"] = e.what();
        emit(j);
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const pencils::PreconditionError& e) {
        json j;
        j["error"] = e.what();
        emit(j);
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    }
}
