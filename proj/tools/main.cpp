// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unruhsim/sweep.hpp"
#include "unruhsim/verify.hpp"

namespace {

int default_workers() {
    if (const char* env = std::getenv("UNRUHSIM_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Negativity of fermionic Unruh-mode states shared with a uniformly "
                 "accelerated observer"};
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "evaluate a negativity sweep and write CSV");
    std::string preset_name, config_file, family_name_arg, out_path;
    std::vector<std::string> config_names;
    std::vector<double> alphas, q_rs, fidelities;
    int gamma_steps = -1;
    int workers = default_workers();

    sweep->add_option("--preset", preset_name,
                      "built-in figure-data preset (fig2..fig8)");
    sweep->add_option("--config-file", config_file, "key=value sweep description file");
    sweep->add_option("--family", family_name_arg,
                      "state family: phi-plus, phi-minus, phi-star, werner");
    sweep->add_option("--config", config_names,
                      "detector configs: AB_I, AB_II, AB_I-particle, AB_I-antiparticle, "
                      "AB_II-particle, AB_II-antiparticle")
        ->delimiter(',');
    sweep->add_option("--alpha", alphas, "entanglement angles (radians)")->delimiter(',');
    sweep->add_option("--qr", q_rs, "Unruh-mode weights q_R in [0,1]")->delimiter(',');
    sweep->add_option("--fidelity", fidelities, "Werner fidelities F in [0,1]")->delimiter(',');
    sweep->add_option("--gamma-steps", gamma_steps, "points on the [0, pi/4] gamma grid");
    sweep->add_option("--out", out_path, "output CSV path");
    sweep->add_option("--workers", workers, "worker threads (default $UNRUHSIM_WORKERS or 1)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the full invariant and oracle suite");
    std::string report_prefix;
    std::string ordering = "canonical";
    verify->add_option("--report", report_prefix,
                       "write <prefix>.txt and <prefix>.json reports");
    verify->add_option("--ordering", ordering, "sign convention: canonical or alternate")
        ->check(CLI::IsMember({"canonical", "alternate"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            unruhsim::SweepConfig cfg;
            if (!preset_name.empty() && !config_file.empty())
                throw std::invalid_argument("--preset and --config-file are exclusive");
            if (!preset_name.empty())
                cfg = unruhsim::preset(preset_name);
            else if (!config_file.empty())
                cfg = unruhsim::parse_config_file(config_file);

            if (!family_name_arg.empty()) cfg.family = unruhsim::family_from_name(family_name_arg);
            if (!config_names.empty()) {
                cfg.configs.clear();
                for (const std::string& name : config_names)
                    cfg.configs.push_back(unruhsim::detector_from_name(name));
            }
            if (!alphas.empty()) cfg.alphas = alphas;
            if (!q_rs.empty()) cfg.q_rs = q_rs;
            if (!fidelities.empty()) cfg.fidelities = fidelities;
            if (gamma_steps > 0) cfg.grid.steps = gamma_steps;
            if (!out_path.empty()) cfg.out_path = out_path;
            cfg.workers = workers;

            if (cfg.out_path.empty())
                throw std::invalid_argument("no output path: pass --out (or use a preset)");

            unruhsim::run_sweep(cfg);
            std::cout << "wrote " << cfg.out_path << "\n";
            return 0;
        }

        const auto convention = ordering == "canonical" ? unruhsim::SignConvention::canonical
                                                        : unruhsim::SignConvention::alternate;
        const unruhsim::VerifyReport report = unruhsim::run_verify(convention);
        unruhsim::write_verify_text(std::cout, report);

        if (!report_prefix.empty()) {
            std::ofstream text(report_prefix + ".txt");
            unruhsim::write_verify_text(text, report);
            std::ofstream json(report_prefix + ".json");
            unruhsim::write_verify_json(json, report);
            if (!text || !json)
                throw std::runtime_error("failed writing report files at prefix " + report_prefix);
            std::cout << "wrote " << report_prefix << ".txt and " << report_prefix << ".json\n";
        }
        return report.failures() == 0 ? 0 : 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
}
