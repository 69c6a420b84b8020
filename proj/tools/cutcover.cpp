// cutcover: exact fractional cut covers and the cubical chromatic number.
//
// Subcommands: gen, compute, verify, random, cert-check.
// Exit codes: 0 success, 1 check failure, 2 parse error, 3 size limit,
// 4 internal verification failure.

#include "cutcover/invariant.hpp"
#include "cutcover/io.hpp"
#include "cutcover/random_model.hpp"
#include "cutcover/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr const char* kVersion = "1.0.0";

using namespace cutcover;

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return read_graph(in);
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json in ") + path + ": " + e.what());
    }
}

// "p/q", "p", or a plain decimal like 0.5
Rational parse_rational_arg(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return rat_parse(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad number: " + s);
    BigInt den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(BigInt(digits), den);
}

struct ReportWriter {
    std::string command;
    nlohmann::json input = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    nlohmann::json finish() const {
        nlohmann::json j;
        j["command"] = command;
        j["input"] = input;
        j["results"] = results;
        j["version"] = kVersion;
        j["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return j;
    }
};

// ---------------------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& output) {
    Graph g = generate(family, params);
    if (output.empty() || output == "-") {
        write_graph(std::cout, g);
    } else {
        std::ofstream out(output);
        if (!out) throw ParseError("cannot write: " + output);
        write_graph(out, g);
    }
    return 0;
}

nlohmann::json bounds_to_json(const BoundsReport& b) {
    auto opt = [](const std::optional<Rational>& r) {
        return r ? nlohmann::json(rat_to_string(*r)) : nlohmann::json(nullptr);
    };
    return {{"lower_bipartite", opt(b.lower_bipartite)},
            {"lower_subgraph", opt(b.lower_subgraph)},
            {"lower_odd_girth", opt(b.lower_odd_girth)},
            {"upper_chi", opt(b.upper_chi)},
            {"exact", opt(b.exact)}};
}

int cmd_compute(const std::string& path, bool with_cert, bool with_bounds,
                bool with_dual_sym, const std::string& format) {
    Graph g = load_graph(path);
    ReportWriter rep;
    rep.command = "compute";
    rep.input = {{"file", path},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edge_count()}};
    XResult r = x_exact(g);
    rep.results["x"] = rat_to_string(r.x);
    rep.results["chi_q"] = rat_to_string(chi_q_of_x(r.x));
    if (with_cert) rep.results["certificate"] = certificate_to_json(g, r);
    if (with_bounds) rep.results["bounds"] = bounds_to_json(bounds(g));
    if (with_dual_sym) {
        DualCertificate d = dual_symmetric(g);
        nlohmann::json y = nlohmann::json::object();
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges()[e];
            y[std::to_string(u) + "-" + std::to_string(v)] = rat_to_string(d.y[e]);
        }
        rep.results["dual_symmetric"] = {{"y", y}, {"value", rat_to_string(d.value)},
                                         {"orbit_constant", d.orbit_constant}};
    }
    if (format == "json") {
        std::cout << rep.finish().dump(2) << "\n";
    } else {
        std::cout << "x = " << rep.results["x"].get<std::string>() << "\n";
        std::cout << "chi_q = " << rep.results["chi_q"].get<std::string>() << "\n";
        if (with_bounds)
            for (auto& [k, v] : rep.results["bounds"].items())
                std::cout << k << " = " << (v.is_null() ? "n/a" : v.get<std::string>()) << "\n";
        if (with_cert)
            std::cout << "certificate: " << rep.results["certificate"]["primal"].size()
                      << " cuts, dual over " << g.edge_count() << " edges\n";
        if (with_dual_sym)
            std::cout << "dual_symmetric value = "
                      << rep.results["dual_symmetric"]["value"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int nmax, const std::string& format) {
    Suite s = run_suite(suite, nmax);
    bool all = suite_passed(s);
    if (format == "json") {
        ReportWriter rep;
        rep.command = "verify";
        rep.input = {{"suite", suite}};
        if (nmax > 0) rep.input["nmax"] = nmax;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& line : s)
            checks.push_back({{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});
        rep.results["checks"] = checks;
        rep.results["passed"] = all;
        std::cout << rep.finish().dump(2) << "\n";
    } else {
        for (const auto& line : s) {
            std::cout << (line.pass ? "PASS " : "FAIL ") << line.name;
            if (!line.detail.empty()) std::cout << "  [" << line.detail << "]";
            std::cout << "\n";
        }
        std::cout << (all ? "suite passed" : "suite FAILED") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_random(int n, const std::string& p_str, int trials, std::uint64_t seed,
               const std::string& delta_str, bool with_x, const std::string& csv,
               const std::string& format) {
    Rational p = parse_rational_arg(p_str);
    Rational delta = parse_rational_arg(delta_str);
    Experiment ex = run_experiment(n, p, trials, seed, delta, with_x);
    if (!csv.empty()) {
        std::ofstream out(csv);
        if (!out) throw ParseError("cannot write: " + csv);
        experiment_to_csv(out, ex);
    }
    if (format == "json") {
        ReportWriter rep;
        rep.command = "random";
        rep.input = {{"n", n}, {"p", rat_to_string(p)}, {"trials", trials},
                     {"seed", seed}, {"delta", rat_to_string(delta)}};
        rep.results = experiment_to_json(ex);
        std::cout << rep.finish().dump(2) << "\n";
    } else {
        std::cout << "claim1 " << ex.claim1_count << "/" << trials << "\n";
        std::cout << "claim2 " << ex.claim2_count << "/" << trials << "\n";
        std::cout << "mean b = " << rat_to_string(ex.mean_b) << "\n";
    }
    return 0;
}

// Detailed certificate re-check naming the first violation found.
int cmd_cert_check(const std::string& graph_path, const std::string& cert_path) {
    Graph g = load_graph(graph_path);
    ParsedCertificate cert = certificate_from_json(load_json(cert_path));

    DualCertificate dual;
    try {
        dual = align_dual_to_graph(g, cert);
    } catch (const ParseError& e) {
        std::cout << "FAIL mismatch: " << e.what() << "\n";
        return 1;
    }
    for (const auto& [cut, w] : cert.primal.family.entries)
        if (cut.member_mask < 0 || cut.member_mask >= (BigInt(1) << g.vertex_count())) {
            std::cout << "FAIL mismatch: cut mask " << mask_to_hex(cut.member_mask)
                      << " out of range for " << g.vertex_count() << " vertices\n";
            return 1;
        }

    // primal: per-edge coverage and total weight
    Rational total = 0;
    std::vector<Rational> covered(g.edge_count(), 0);
    for (const auto& [cut, w] : cert.primal.family.entries) {
        if (w < 0) {
            std::cout << "FAIL invalid: negative weight on cut " << mask_to_hex(cut.member_mask)
                      << "\n";
            return 1;
        }
        total += w;
        Cut c = make_cut(g, cut.member_mask);
        for (int e : c.edge_indices) covered[e] += w;
    }
    if (total != cert.x) {
        std::cout << "FAIL invalid: primal weights sum to " << rat_to_string(total)
                  << ", certificate claims x = " << rat_to_string(cert.x) << "\n";
        return 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (covered[e] < 1) {
            auto [u, v] = g.edges()[e];
            std::cout << "FAIL invalid: edge " << u << "-" << v << " covered only "
                      << rat_to_string(covered[e]) << "\n";
            return 1;
        }

    // dual: nonnegativity, total, and the all-cuts constraint via MAXCUT
    Rational dtotal = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (dual.y[e] < 0) {
            auto [u, v] = g.edges()[e];
            std::cout << "FAIL invalid: negative dual weight on edge " << u << "-" << v << "\n";
            return 1;
        }
        dtotal += dual.y[e];
    }
    if (dtotal != cert.x) {
        std::cout << "FAIL invalid: dual weights sum to " << rat_to_string(dtotal)
                  << ", certificate claims x = " << rat_to_string(cert.x) << "\n";
        return 1;
    }
    MaxCutResult mc = max_cut(g, &dual.y);
    if (mc.value > 1) {
        std::cout << "FAIL invalid: cut " << mask_to_hex(mc.witness.member_mask)
                  << " carries dual weight " << rat_to_string(mc.value) << " > 1\n";
        return 1;
    }
    std::cout << "PASS x = " << rat_to_string(cert.x) << " certified (primal "
              << cert.primal.family.entries.size() << " cuts, dual tight at "
              << rat_to_string(mc.value) << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fractional cut covers and the cubical chromatic number"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string family, gen_out;
    std::vector<int> params;
    gen->add_option("family", family,
                    "complete | cycle | path | complete-bipartite | petersen | kneser | "
                    "cube-power | cube-layer | circular-clique")
        ->required();
    gen->add_option("params", params, "integer family parameters");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // compute
    auto* compute = app.add_subcommand("compute", "compute x(G) and chi_q(G)");
    std::string graph_path, format = "json";
    bool with_cert = false, with_bounds = false, with_dual_sym = false;
    compute->add_option("graph", graph_path, "graph file ('-' for stdin)")->required();
    compute->add_flag("--certificate", with_cert, "emit primal/dual certificates");
    compute->add_flag("--bounds", with_bounds, "emit the bounds report");
    compute->add_flag("--dual-symmetric", with_dual_sym, "emit the orbit-constant dual");
    compute->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite, verify_format = "text";
    int nmax = 0;
    verify->add_option("suite", suite, "values | cube | binom | operations | kneser | polytope")
        ->required();
    verify->add_option("--nmax", nmax, "scan limit for cube/binom suites");
    verify->add_option("--format", verify_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    // random
    auto* random = app.add_subcommand("random", "seeded G(n,p) experiment");
    int rn = 0, trials = 0;
    std::string p_str, delta_str = "1/2", csv_path, random_format = "json";
    std::uint64_t seed = 0;
    bool with_x = false;
    random->add_option("n", rn, "vertex count (<= 24)")->required();
    random->add_option("p", p_str, "edge probability, 'p/q' or decimal")->required();
    random->add_option("trials", trials, "trial count")->required();
    random->add_option("--seed", seed, "64-bit seed");
    random->add_option("--delta", delta_str, "claim slack (default 1/2)");
    random->add_option("--csv", csv_path, "also write per-trial CSV");
    random->add_flag("--with-x", with_x, "solve x(G) per trial");
    random->add_option("--format", random_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    // cert-check
    auto* cert = app.add_subcommand("cert-check", "re-verify a certificate file");
    std::string cert_graph, cert_file;
    cert->add_option("graph", cert_graph, "graph file")->required();
    cert->add_option("certificate", cert_file, "certificate json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(family, params, gen_out);
        if (*compute) return cmd_compute(graph_path, with_cert, with_bounds, with_dual_sym, format);
        if (*verify) return cmd_verify(suite, nmax, verify_format);
        if (*random) return cmd_random(rn, p_str, trials, seed, delta_str, with_x, csv_path,
                                       random_format);
        if (*cert) return cmd_cert_check(cert_graph, cert_file);
    } catch (const cutcover::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cutcover::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) { // includes EdgelessError
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) { // internal verification failures
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
