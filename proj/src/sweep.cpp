// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace unruhsim {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kAlphaFig2 = std::numbers::pi / 4.0;
constexpr double kAlphaSmall = std::numbers::pi / 18.0;

std::vector<DetectorConfig> nondistinguishing_pair() {
    return {detector_from_name("AB_I"), detector_from_name("AB_II")};
}

std::vector<DetectorConfig> distinguishing_four() {
    return {detector_from_name("AB_I-particle"), detector_from_name("AB_I-antiparticle"),
            detector_from_name("AB_II-particle"), detector_from_name("AB_II-antiparticle")};
}

std::vector<double> split_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

SweepConfig::SweepConfig() { grid.stop = kQuarterPi; }

void validate(const SweepConfig& config) {
    if (config.configs.empty()) throw std::invalid_argument("sweep config: configs is empty");
    if (config.alphas.empty() && config.family != Family::werner)
        throw std::invalid_argument("sweep config: alpha list is empty");
    if (config.q_rs.empty()) throw std::invalid_argument("sweep config: qr list is empty");
    for (double q : config.q_rs)
        if (q < 0.0 || q > 1.0) throw std::invalid_argument("sweep config: qr outside [0, 1]");
    if (config.family == Family::werner) {
        if (config.fidelities.empty())
            throw std::invalid_argument("sweep config: fidelity list is empty for werner");
        for (double f : config.fidelities)
            if (f < 0.0 || f > 1.0)
                throw std::invalid_argument("sweep config: fidelity outside [0, 1]");
    } else if (!config.fidelities.empty()) {
        throw std::invalid_argument("sweep config: fidelity given for a pure family");
    }
    if (config.grid.steps < 1) throw std::invalid_argument("sweep config: gamma-steps < 1");
    if (config.grid.start < 0.0 || config.grid.stop > kQuarterPi + 1e-12 ||
        config.grid.start > config.grid.stop)
        throw std::invalid_argument("sweep config: gamma grid outside [0, pi/4]");
    if (config.workers < 1) throw std::invalid_argument("sweep config: workers < 1");
}

std::vector<CurveRecord> evaluate_sweep(const SweepConfig& config) {
    validate(config);

    const std::vector<double> alphas =
        config.family == Family::werner ? std::vector<double>{kAlphaFig2} : config.alphas;
    const std::vector<double> fids =
        config.family == Family::werner ? config.fidelities
                                        : std::vector<double>{std::nan("")};

    std::vector<CurveRecord> records;
    for (const DetectorConfig& det : config.configs)
        for (double alpha : alphas)
            for (double q_r : config.q_rs)
                for (double fid : fids)
                    for (int g = 0; g < config.grid.steps; ++g) {
                        const double gamma =
                            config.grid.steps == 1
                                ? config.grid.start
                                : config.grid.start + (config.grid.stop - config.grid.start) * g /
                                                          (config.grid.steps - 1);
                        records.push_back(
                            {config.family, det, alpha, q_r, fid, gamma, 0.0});
                    }

    auto evaluate = [&config](CurveRecord& r) {
        ScenarioParams params{config.family, r.alpha,
                              std::isnan(r.fidelity) ? std::optional<double>{}
                                                     : std::optional<double>{r.fidelity},
                              r.gamma, r.q_r};
        r.negativity = scenario_negativity(params, r.config).negativity;
    };

    const int workers = std::min<int>(config.workers, static_cast<int>(records.size()));
    if (workers <= 1) {
        for (CurveRecord& r : records) evaluate(r);
    } else {
        // Threads pull indices from a shared counter; the records vector is
        // pre-ordered, so output order does not depend on scheduling.
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&records, &next, &evaluate] {
                for (std::size_t i = next.fetch_add(1); i < records.size();
                     i = next.fetch_add(1))
                    evaluate(records[i]);
            });
        for (std::thread& t : pool) t.join();
    }
    return records;
}

void write_csv(std::ostream& os, const std::vector<CurveRecord>& records) {
    os << "family,config,alpha,qR,F,gamma,negativity\n";
    for (const CurveRecord& r : records) {
        os << family_name(r.family) << ',' << r.config.name() << ',' << format_real(r.alpha)
           << ',' << format_real(r.q_r) << ','
           << (std::isnan(r.fidelity) ? std::string{} : format_real(r.fidelity)) << ','
           << format_real(r.gamma) << ',' << format_real(r.negativity) << '\n';
    }
}

void run_sweep(const SweepConfig& config) {
    const std::vector<CurveRecord> records = evaluate_sweep(config);
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + config.out_path);
    write_csv(out, records);
    if (!out) throw std::runtime_error("failed writing output file: " + config.out_path);
}

SweepConfig preset(const std::string& name) {
    SweepConfig cfg;
    if (name == "fig2") {
        cfg.family = Family::phi_plus;
        cfg.configs = nondistinguishing_pair();
        cfg.alphas = {kAlphaFig2, kAlphaSmall};
        cfg.q_rs = {1.0, 0.85, 0.73};
    } else if (name == "fig3") {
        cfg.family = Family::phi_plus;
        cfg.configs = distinguishing_four();
        cfg.alphas = {kAlphaFig2};
        cfg.q_rs = {1.0, 0.75, 0.5, 0.25};
    } else if (name == "fig4") {
        cfg.family = Family::phi_minus;
        cfg.configs = nondistinguishing_pair();
        cfg.alphas = {kAlphaFig2, kAlphaSmall};
        cfg.q_rs = {1.0, 0.85, 0.73};
    } else if (name == "fig5") {
        cfg.family = Family::phi_minus;
        cfg.configs = distinguishing_four();
        cfg.alphas = {kAlphaFig2};
        cfg.q_rs = {1.0, 0.75, 0.5, 0.25};
    } else if (name == "fig6") {
        cfg.family = Family::phi_star;
        cfg.configs = nondistinguishing_pair();
        cfg.alphas = {kAlphaFig2, kAlphaSmall};
        cfg.q_rs = {1.0, 0.85, 0.73};
    } else if (name == "fig7") {
        cfg.family = Family::werner;
        cfg.configs = nondistinguishing_pair();
        cfg.fidelities = {0.95, 0.65};
        cfg.q_rs = {1.0, 0.85, 0.73};
    } else if (name == "fig8") {
        cfg.family = Family::werner;
        cfg.configs = distinguishing_four();
        cfg.fidelities = {0.95};
        cfg.q_rs = {1.0, 0.75, 0.5, 0.25};
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    cfg.out_path = name + ".csv";
    return cfg;
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

SweepConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);

    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                        ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "family") {
            cfg.family = family_from_name(value);
        } else if (key == "configs") {
            cfg.configs.clear();
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!trim(item).empty()) cfg.configs.push_back(detector_from_name(trim(item)));
        } else if (key == "alpha") {
            cfg.alphas = split_doubles(value);
        } else if (key == "qr") {
            cfg.q_rs = split_doubles(value);
        } else if (key == "fidelity") {
            cfg.fidelities = split_doubles(value);
        } else if (key == "gamma-start") {
            cfg.grid.start = std::stod(value);
        } else if (key == "gamma-stop") {
            cfg.grid.stop = std::stod(value);
        } else if (key == "gamma-steps") {
            cfg.grid.steps = std::stoi(value);
        } else if (key == "out") {
            cfg.out_path = value;
        } else if (key == "workers") {
            cfg.workers = std::stoi(value);
        } else {
            throw std::invalid_argument("config file line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

std::string format_real(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

}  // namespace unruhsim
