// sbs: command-line front end for the Brillouin transducer library.
//
//   sbs <command> [--config run.cfg] [--out file] [--format csv|json] [--quiet]
//
// commands: materials coupling smatrix sweep dynamics stokes design

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sbs/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Brillouin acousto-optic transducer simulator"};
    std::string command;
    std::string config_path;
    std::string out_path;
    std::string format;
    bool quiet = false;

    app.add_option("command", command, "materials|coupling|smatrix|sweep|dynamics|stokes|design")
        ->required();
    app.add_option("--config", config_path, "run configuration (dotted key = value)");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--quiet", quiet, "suppress the summary table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sbs::cli::validation_error;
    }

    const auto cmd = sbs::cli::parse_command(command);
    if (!cmd) {
        std::cerr << "error: unknown command '" << command << "'\n";
        return sbs::cli::validation_error;
    }
    const auto fmt = format.empty() ? sbs::cli::default_format(*cmd)
                                    : (format == "csv" ? sbs::cli::Format::csv
                                                       : sbs::cli::Format::json);

    sbs::RunConfig cfg;
    try {
        if (!config_path.empty())
            cfg = sbs::RunConfig::load(config_path);
    } catch (const sbs::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sbs::cli::validation_error;
    }

    // Buffer so a failed run never leaves a partial output file behind.
    std::ostringstream buffer;
    std::ostream* table = (quiet || out_path.empty()) ? nullptr : &std::cout;
    const int rc = sbs::cli::run(*cmd, cfg, buffer, fmt, std::cerr, table);
    if (rc != sbs::cli::ok)
        return rc;

    if (out_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return sbs::cli::validation_error;
        }
        out << buffer.str();
    }
    return sbs::cli::ok;
}
