#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "quiverhh/report.hpp"

int main(int argc, char** argv)
{
    quiverhh::Command cmd;
    std::string format = "text";
    std::string output;

    CLI::App app{"Hochschild homology and global dimension of bound quiver algebras"};
    app.add_option("command", cmd.verb, "validate|basis|cycles|hh|certify|gldim|pd|compare|corpus")
        ->required()
        ->check(CLI::IsMember({"validate", "basis", "cycles", "hh", "certify", "gldim", "pd", "compare", "corpus"}));
    app.add_option("input", cmd.input, ".quiver file (not used by corpus)");
    app.add_option("--field", cmd.field, "q or fp:<prime>; overrides the file");
    app.add_option("--m", cmd.m, "truncation order (default 2)");
    app.add_option("--repetitions", cmd.repetitions, "repetitions of the cycle in the certificate");
    app.add_option("--max-degree", cmd.max_degree, "highest Hochschild degree");
    app.add_option("--max-length", cmd.max_length, "longest cycle searched");
    app.add_option("--cutoff", cmd.cutoff, "syzygy steps for the general pd computation");
    app.add_option("--vertex", cmd.vertex, "single simple module for pd");
    app.add_option("--cycle", cmd.cycle, "comma-separated arrows of an oriented cycle");
    app.add_option("--seed", cmd.seed, "first corpus seed");
    app.add_option("--count", cmd.count, "number of corpus algebras");
    app.add_option("--check", cmd.check, "comma-separated corpus properties, or all");
    app.add_option("--chain-cap", cmd.chain_cap, "largest chain space, in tuples");
    app.add_option("--module-cap", cmd.module_cap, "largest syzygy dimension");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output, "write the report here instead of stdout");
    CLI11_PARSE(app, argc, argv);

    if (cmd.verb != "corpus" && cmd.input.empty()) {
        std::cerr << "an input file is required for '" << cmd.verb << "'\n";
        return 1;
    }

    quiverhh::Report report = quiverhh::run(cmd);
    const std::string text = quiverhh::emit_report(report, format);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "cannot write '" << output << "'\n";
            return 1;
        }
        out << text;
    }
    return static_cast<int>(report.exit_code);
}
