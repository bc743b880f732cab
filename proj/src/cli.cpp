#include "morsify/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "morsify/dot.hpp"
#include "morsify/input.hpp"
#include "morsify/oracle.hpp"
#include "morsify/report.hpp"

namespace morsify {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path.string());
    out << content;
}

int run_analyze(const std::string& input_path, bool oracle, const std::string& json_path,
                const std::string& dot_dir, bool quiet) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << input_path << "\n";
        return 3;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    std::optional<ProblemSpec> spec;
    try {
        spec = parse_input(buffer.str());
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    AnalyzeOptions options;
    options.run_oracle = oracle && spec->real_roots.size() >= 2;
    if (oracle && !options.run_oracle)
        std::cerr << "note: the oracle needs at least two real roots; skipped\n";
    RootSystem rs = to_root_system(*spec);
    MorsificationReport report = analyze(rs, spec->unit, options);

    if (!json_path.empty()) write_file(json_path, emit_report(report));
    if (!dot_dir.empty()) {
        std::filesystem::path dir(dot_dir);
        std::filesystem::create_directories(dir);
        write_file(dir / "real_tree.dot", emit_dot(report.real_tree));
        write_file(dir / "complex_tree.dot", emit_dot(report.embedded));
        if (report.integrated) write_file(dir / "integrated_tree.dot", emit_dot(*report.integrated));
        if (report.discriminant)
            write_file(dir / "discriminant_tree.dot", emit_dot(*report.discriminant, "delta"));
    }
    if (!quiet) std::cout << summarize_report(report);

    if (!report.injectivity.pass) {
        const auto& w = *report.injectivity.witness;
        std::cerr << "injectivity condition fails at the vertex with E = "
                  << report.real_tree.vertex(w.vertex).exponent.to_string()
                  << ": the initial coefficients attached to its outgoing edges "
                  << w.entry_a + 1 << ".." << w.entry_b + 1 << " sum to zero\n";
        return 2;
    }
    if ((report.theorem_b && !*report.theorem_b) ||
        (report.oracle_agrees && !*report.oracle_agrees)) {
        std::cerr << "internal inconsistency: the integrated tree and the independent checks "
                     "disagree\n";
        return 4;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Analyzer of morsification combinatorics via contact trees"};
    app.require_subcommand(1);

    std::string input_path, json_path, dot_dir;
    bool oracle = false, quiet = false;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze one problem file");
    analyze_cmd->add_option("input", input_path, "problem file")->required();
    analyze_cmd->add_flag("--oracle", oracle, "run the numeric-evaluation oracle");
    analyze_cmd->add_option("--json", json_path, "write the JSON report here");
    analyze_cmd->add_option("--dot-dir", dot_dir, "write DOT trees into this directory");
    analyze_cmd->add_flag("--quiet", quiet, "suppress the console summary");

    // CLI11 wants argv-style reversed arguments.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        return run_analyze(input_path, oracle, json_path, dot_dir, quiet);
    } catch (const internal_check_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const no_stabilization_error& e) {
        std::cerr << "oracle: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace morsify
