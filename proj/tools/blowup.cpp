// blowup: blow-up smoothness and categorical ledger for hypersurfaces in A^N.
//
//   blowup analyze scene.json [--format structured|plain] [--quiet] [--max-degree D]
//   blowup charts|oracle|sod scene.json ...
//   blowup selftest [--seed S] [--count N]
//
// Exit status: 0 analysis completed, 2 input/validation/guardrail error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "blowup/errors.hpp"
#include "blowup/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw blowup::InputError("cannot open scene file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blow-up smoothness checks and categorical ledger for hypersurfaces in affine space"};
    app.set_version_flag("--version", std::string(blowup::kToolVersion));
    app.require_subcommand(1);

    std::string format = "structured";
    bool quiet = false;
    std::size_t max_degree = 0;
    std::uint64_t seed = 20240611;
    std::size_t count = 200;
    std::string scene_path;

    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"structured", "plain"}))
        ->capture_default_str();
    app.add_flag("--quiet", quiet, "Suppress the summary on standard error");
    app.add_option("--max-degree", max_degree, "Abort Groebner runs whose S-pair degree exceeds this (0: no limit)")
        ->capture_default_str();

    for (const char* name : {"analyze", "charts", "sod", "oracle"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("scene", scene_path, "Scene file (JSON), or - for standard input")->required();
        sub->fallthrough();
    }
    auto* selftest = app.add_subcommand("selftest", "Run the fixture corpus and seeded random scenes");
    selftest->add_option("--seed", seed, "Seed for the random scene corpus")->capture_default_str();
    selftest->add_option("--count", count, "Number of random scenes per corpus")->capture_default_str();
    selftest->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    blowup::GroebnerOptions options;
    options.max_degree = max_degree;
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        blowup::Json report;
        int status = 0;
        if (command == "selftest") {
            auto summary = blowup::selftest_report(seed, count, options);
            report = std::move(summary.report);
            status = summary.passed ? 0 : kExitInternal;
        } else {
            const auto file = blowup::parse_scene_file(read_input(scene_path));
            const auto scene = blowup::build_scene(file, options);
            if (command == "analyze")
                report = blowup::analyze_report(file, scene, blowup::analyze(scene, options));
            else if (command == "charts")
                report = blowup::charts_report(file, scene, options);
            else if (command == "oracle")
                report = blowup::oracle_report(file, scene, options);
            else
                report = blowup::sod_report(file, scene, options);
        }
        std::cout << (format == "plain" ? blowup::to_plain(report) : blowup::to_structured(report));
        if (!quiet) std::cerr << blowup::summary_line(report) << "\n";
        return status;
    } catch (const blowup::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const blowup::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
