// Command-line front end: set-system oracles and the KE-graph harness.
//
// Exit codes: 0 passing verdict or certificate, 1 failing verdict,
// 2 usage, format, or precondition errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ketool/io.hpp"
#include "ketool/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ke::PreconditionError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const ke::Report& report, bool as_json) {
    std::cout << (as_json ? report.to_json() : report.to_text());
}

struct Options {
    std::string file;
    std::string method = "all";
    bool json = false;
    bool timing = false;
    std::size_t search_cap = 20;

    std::size_t gen_members = 0;
    bool gen_hke = false;
    std::uint64_t gen_seed = 0;
    std::uint64_t gen_cell_bound = 2;
    std::size_t gen_ground = 12;
    double gen_density = 0.5;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for Konig-Egervary set-systems and graphs"};
    app.require_subcommand(1);
    Options opt;

    auto* hke = app.add_subcommand("hke", "Set-system oracles");
    hke->require_subcommand(1);
    auto* check = hke->add_subcommand("check", "Run the HKE oracles on a set-system file");
    check->add_option("file", opt.file, "set-system file")->required();
    check->add_option("--method", opt.method, "brute|pairs|partition|all")
        ->check(CLI::IsMember({"brute", "pairs", "partition", "all"}));
    check->add_flag("--json", opt.json, "emit the structured report");
    check->add_flag("--timing", opt.timing, "append timing to the report");

    auto* atoms = hke->add_subcommand("atoms", "Print the membership-signature partition");
    atoms->add_option("file", opt.file, "set-system file")->required();
    atoms->add_flag("--json", opt.json, "emit the structured report");

    auto* gen = hke->add_subcommand("gen", "Emit a generated set-system");
    gen->add_option("--members", opt.gen_members, "member count")->required();
    gen->add_option("--seed", opt.gen_seed, "random seed")->required();
    gen->add_flag("--hke", opt.gen_hke, "generate a family that passes the oracles");
    gen->add_option("--cell-bound", opt.gen_cell_bound, "max atom cell size (with --hke)");
    gen->add_option("--ground", opt.gen_ground, "ground size (without --hke)");
    gen->add_option("--density", opt.gen_density, "membership density (without --hke)");

    auto* graph = app.add_subcommand("graph", "KE-graph recognition and certification");
    graph->require_subcommand(1);
    auto* gke = graph->add_subcommand("ke", "Check alpha + mu = |V|");
    gke->add_option("file", opt.file, "graph file")->required();
    gke->add_flag("--json", opt.json, "emit the structured report");
    gke->add_flag("--timing", opt.timing, "append timing to the report");

    auto* gomega = graph->add_subcommand("omega", "List maximum independent sets and test them");
    gomega->add_option("file", opt.file, "graph file")->required();
    gomega->add_flag("--json", opt.json, "emit the structured report");
    gomega->add_flag("--timing", opt.timing, "append timing to the report");

    auto* gverify = graph->add_subcommand("verify", "Search for a KE certificate");
    gverify->add_option("file", opt.file, "graph file")->required();
    gverify->add_option("--search-cap", opt.search_cap, "max maximum-independent-set count");
    gverify->add_flag("--json", opt.json, "emit the structured report");
    gverify->add_flag("--timing", opt.timing, "append timing to the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) {
            ke::ParsedSetSystem parsed = ke::parse_setsystem(read_file(opt.file));
            ke::Report report =
                ke::hke_check_report(parsed.system, parsed.warnings, opt.method, opt.timing);
            emit(report, opt.json);
            return report.exit_code;
        }
        if (atoms->parsed()) {
            ke::ParsedSetSystem parsed = ke::parse_setsystem(read_file(opt.file));
            ke::Report report = ke::hke_atoms_report(parsed.system, parsed.warnings);
            emit(report, opt.json);
            return report.exit_code;
        }
        if (gen->parsed()) {
            ke::SetSystem family =
                opt.gen_hke
                    ? ke::generate_hke(opt.gen_members, opt.gen_cell_bound, opt.gen_seed)
                    : ke::random_setsystem(opt.gen_members, opt.gen_ground, opt.gen_density,
                                           opt.gen_seed);
            std::cout << ke::render_setsystem(family);
            return 0;
        }
        if (gke->parsed()) {
            ke::ParsedGraph parsed = ke::parse_graph(read_file(opt.file));
            ke::Report report = ke::graph_ke_report(parsed.graph, parsed.warnings, opt.timing);
            emit(report, opt.json);
            return report.exit_code;
        }
        if (gomega->parsed()) {
            ke::ParsedGraph parsed = ke::parse_graph(read_file(opt.file));
            ke::Report report = ke::graph_omega_report(parsed.graph, parsed.warnings, opt.timing);
            emit(report, opt.json);
            return report.exit_code;
        }
        if (gverify->parsed()) {
            ke::ParsedGraph parsed = ke::parse_graph(read_file(opt.file));
            ke::Report report = ke::graph_verify_report(parsed.graph, parsed.warnings,
                                                        opt.search_cap, opt.timing);
            emit(report, opt.json);
            return report.exit_code;
        }
    } catch (const ke::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ke::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ke::TheoremViolation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
