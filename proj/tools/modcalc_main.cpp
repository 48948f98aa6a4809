#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "modcalc/scenario.hpp"

#ifndef MODCALC_SCENARIO_DIR
#define MODCALC_SCENARIO_DIR "scenarios"
#endif

int main(int argc, char** argv) {
    CLI::App app{"modcalc: exact modular-class calculus on foliated charts"};
    app.require_subcommand(1);

    std::string path, out_path, format = "text";
    uint64_t seed = 12345;
    bool parallel = false;

    CLI::App* run = app.add_subcommand("run", "run a scenario file");
    run->add_option("file", path, "scenario file")->required();
    run->add_option("--seed", seed, "seed for property suites");
    run->add_flag("--parallel", parallel, "run independent checks concurrently");
    run->add_option("--format", format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    run->add_option("--out", out_path, "write the report to a file");

    CLI::App* syntax = app.add_subcommand("check-syntax", "load a scenario and exit");
    syntax->add_option("file", path, "scenario file")->required();

    std::string dir = MODCALC_SCENARIO_DIR;
    CLI::App* examples = app.add_subcommand("examples", "list bundled scenarios");
    examples->add_option("--dir", dir, "scenario directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (syntax->parsed()) {
            modcalc::load_scenario(path);
            std::cout << "OK: " << path << "\n";
            return 0;
        }
        if (examples->parsed()) {
            auto files = modcalc::list_scenarios(dir);
            if (files.empty()) {
                std::cout << "no .scn files under " << dir << "\n";
            } else {
                for (const auto& f : files) std::cout << f << "\n";
            }
            return 0;
        }
        modcalc::Scenario sc = modcalc::load_scenario(path);
        modcalc::Report rep = modcalc::run_scenario(sc, seed, parallel);
        std::string text = format == "structured" ? modcalc::emit_structured(rep)
                                                  : modcalc::emit_text(rep);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
        }
        return modcalc::report_exit_code(rep);
    } catch (const modcalc::Error& e) {
        std::cerr << "load error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
