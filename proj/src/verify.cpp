// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "unruhsim/eig.hpp"
#include "unruhsim/sweep.hpp"

namespace unruhsim {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kConvergenceTol = 1e-9;
constexpr double kPatternTol = 1e-9;
constexpr double kMonotonicityTol = 1e-12;
constexpr double kReproductionTol = 1e-12;

const std::vector<double> kQrGrid{0.25, 0.5, 0.73, 0.75, 0.85, 1.0};
const std::vector<double> kAlphaGrid{kQuarterPi, std::numbers::pi / 18.0};
const std::vector<double> kWernerF{0.95, 0.65};

CheckResult make(const std::string& name, bool ok, double measured, double threshold,
                 std::string note = {}) {
    return {name, ok ? CheckStatus::pass : CheckStatus::fail, measured, threshold,
            std::move(note)};
}

double max_abs_component_diff(const FockVector& a, const FockVector& b) {
    double worst = 0.0;
    for (int i = 0; i < kFockDim; ++i) worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
    return worst;
}

void check_fock_algebra(std::vector<CheckResult>& items, SignConvention conv) {
    double nilpotency = 0.0, anticomm = 0.0, number_dev = 0.0, adjoint_dev = 0.0;

    for (int b = 0; b < kFockDim; ++b) {
        const FockVector basis = FockVector::basis(static_cast<std::uint8_t>(b));
        for (int i = 0; i < kModeCount; ++i) {
            const FockVector twice =
                apply_creation(apply_creation(basis, mode(i), conv), mode(i), conv);
            nilpotency = std::max(nilpotency, std::sqrt(twice.norm_sq()));

            for (int j = 0; j < kModeCount; ++j) {
                // {a_i, a^dag_j} = delta_ij
                const FockVector mixed =
                    apply_annihilation(apply_creation(basis, mode(j), conv), mode(i), conv) +
                    apply_creation(apply_annihilation(basis, mode(i), conv), mode(j), conv);
                FockVector expected;
                if (i == j) expected = basis;
                anticomm = std::max(anticomm, max_abs_component_diff(mixed, expected));

                if (i != j) {
                    const FockVector cc =
                        apply_creation(apply_creation(basis, mode(j), conv), mode(i), conv) +
                        apply_creation(apply_creation(basis, mode(i), conv), mode(j), conv);
                    anticomm = std::max(anticomm, std::sqrt(cc.norm_sq()));
                }
            }

            const FockVector n_op =
                apply_creation(apply_annihilation(basis, mode(i), conv), mode(i), conv);
            const FockBasisState fb{static_cast<std::uint8_t>(b)};
            const FockVector expected = cplx{fb.occupied(i) ? 1.0 : 0.0} * basis;
            number_dev = std::max(number_dev, max_abs_component_diff(n_op, expected));
        }
    }

    for (int m = 0; m < kModeCount; ++m) {
        ComplexMatrix create(kFockDim), annihilate(kFockDim);
        for (int b = 0; b < kFockDim; ++b) {
            const FockVector basis = FockVector::basis(static_cast<std::uint8_t>(b));
            const FockVector up = apply_creation(basis, mode(m), conv);
            const FockVector down = apply_annihilation(basis, mode(m), conv);
            for (int r = 0; r < kFockDim; ++r) {
                create(static_cast<std::size_t>(r), static_cast<std::size_t>(b)) = up.amp[r];
                annihilate(static_cast<std::size_t>(r), static_cast<std::size_t>(b)) = down.amp[r];
            }
        }
        adjoint_dev =
            std::max(adjoint_dev, ComplexMatrix::max_abs_diff(annihilate, create.adjoint()));
    }

    items.push_back(make("fock/nilpotency", nilpotency == 0.0, nilpotency, 0.0));
    items.push_back(make("fock/anticommutation", anticomm == 0.0, anticomm, 0.0));
    items.push_back(make("fock/number-operator", number_dev == 0.0, number_dev, 0.0));
    items.push_back(make("fock/adjointness", adjoint_dev <= 1e-15, adjoint_dev, 1e-15));
}

void check_operator_reproduction(std::vector<CheckResult>& items, SignConvention conv) {
    std::mt19937 rng(412);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double dev_particle = 0.0, dev_antiparticle = 0.0;
    for (int draw = 0; draw < 50; ++draw) {
        const UnruhParams p(unit(rng) * kQuarterPi, unit(rng));
        dev_particle = std::max(
            dev_particle,
            max_abs_component_diff(unruh_particle_via_operators(p, conv), unruh_particle(p)));
        dev_antiparticle = std::max(dev_antiparticle,
                                    max_abs_component_diff(unruh_antiparticle_via_operators(p, conv),
                                                           unruh_antiparticle(p)));
    }
    items.push_back(make("unruh/particle-operator-reproduction", dev_particle <= kReproductionTol,
                         dev_particle, kReproductionTol,
                         conv == SignConvention::alternate
                             ? "alternate ordering: expected to fail"
                             : ""));
    items.push_back(make("unruh/antiparticle-operator-reproduction",
                         dev_antiparticle <= kReproductionTol, dev_antiparticle, kReproductionTol,
                         conv == SignConvention::alternate
                             ? "alternate ordering: expected to fail"
                             : ""));
}

void check_state_properties(std::vector<CheckResult>& items) {
    double norm_dev = 0.0, ortho_dev = 0.0;
    for (int g = 0; g <= 24; ++g)
        for (int q = 0; q <= 12; ++q) {
            const UnruhParams p(kQuarterPi * g / 24, q / 12.0);
            const FockVector vac = unruh_vacuum(p);
            const FockVector one_p = unruh_particle(p);
            const FockVector one_m = unruh_antiparticle(p);
            for (const FockVector* v : {&vac, &one_p, &one_m})
                norm_dev = std::max(norm_dev, std::abs(v->norm_sq() - 1.0));
            ortho_dev = std::max({ortho_dev, std::abs(inner_product(vac, one_p)),
                                  std::abs(inner_product(vac, one_m)),
                                  std::abs(inner_product(one_p, one_m))});

            for (double alpha : kAlphaGrid)
                for (Family family : {Family::phi_plus, Family::phi_minus, Family::phi_star}) {
                    const SharedState s =
                        build_shared_state({family, alpha, std::nullopt}, p);
                    norm_dev = std::max(
                        norm_dev, std::abs(std::get<StateVector>(s).norm_sq() - 1.0));
                }
        }
    items.push_back(make("unruh/unit-norms", norm_dev <= 1e-12, norm_dev, 1e-12));
    items.push_back(make("unruh/orthogonality", ortho_dev <= 1e-12, ortho_dev, 1e-12));

    double werner_min_eig = 0.0, werner_trace_dev = 0.0;
    for (double f : {0.0, 0.3, 0.65, 0.95, 1.0})
        for (double q : {0.0, 0.5, 1.0}) {
            const UnruhParams p(0.4, q);
            const auto rho = std::get<DensityMatrix>(
                build_shared_state({Family::werner, kQuarterPi, f}, p));
            werner_trace_dev =
                std::max(werner_trace_dev, std::abs(rho.mat.trace() - cplx{1.0}));
            const auto eigs = hermitian_eigenvalues(rho.mat);
            werner_min_eig = std::min(werner_min_eig, eigs.front());
        }
    items.push_back(make("unruh/werner-density-valid",
                         werner_min_eig >= -1e-10 && werner_trace_dev <= 1e-12,
                         std::min(werner_min_eig, -werner_trace_dev), -1e-10,
                         "measured: min eigenvalue / trace deviation"));
}

double negativity_of(Family family, double alpha, std::optional<double> fidelity, double gamma,
                     double q_r, const DetectorConfig& config) {
    return scenario_negativity({family, alpha, fidelity, gamma, q_r}, config).negativity;
}

struct FamilyCase {
    Family family;
    double alpha;
    std::optional<double> fidelity;
    std::string tag;
};

std::vector<FamilyCase> family_cases() {
    std::vector<FamilyCase> cases;
    for (Family family : {Family::phi_plus, Family::phi_minus, Family::phi_star})
        for (double alpha : kAlphaGrid) {
            std::ostringstream tag;
            tag << family_name(family) << "(alpha=" << alpha << ")";
            cases.push_back({family, alpha, std::nullopt, tag.str()});
        }
    for (double f : kWernerF) {
        std::ostringstream tag;
        tag << "werner(F=" << f << ")";
        cases.push_back({Family::werner, kQuarterPi, f, tag.str()});
    }
    return cases;
}

void check_convergence(std::vector<CheckResult>& items) {
    const DetectorConfig ab1 = detector_from_name("AB_I");
    const DetectorConfig ab2 = detector_from_name("AB_II");

    double worst_gap = 0.0, worst_spread = 0.0;
    for (const FamilyCase& fc : family_cases()) {
        double lo_1 = 1e300, hi_1 = -1e300, lo_2 = 1e300, hi_2 = -1e300;
        for (double q_r : kQrGrid) {
            const double n1 = negativity_of(fc.family, fc.alpha, fc.fidelity, kQuarterPi, q_r, ab1);
            const double n2 = negativity_of(fc.family, fc.alpha, fc.fidelity, kQuarterPi, q_r, ab2);
            worst_gap = std::max(worst_gap, std::abs(n1 - n2));
            lo_1 = std::min(lo_1, n1); hi_1 = std::max(hi_1, n1);
            lo_2 = std::min(lo_2, n2); hi_2 = std::max(hi_2, n2);
        }
        worst_spread = std::max({worst_spread, hi_1 - lo_1, hi_2 - lo_2});
    }
    items.push_back(make("scenario/infinite-acceleration-convergence", worst_gap < kConvergenceTol,
                         worst_gap, kConvergenceTol));
    items.push_back(make("scenario/qr-independence-at-pi-over-4", worst_spread < kConvergenceTol,
                         worst_spread, kConvergenceTol));
}

void check_zero_acceleration(std::vector<CheckResult>& items) {
    const DetectorConfig ab1 = detector_from_name("AB_I");
    double worst = 0.0;
    for (Family family : {Family::phi_plus, Family::phi_minus})
        for (double alpha : {0.1, std::numbers::pi / 18.0, 0.5, kQuarterPi, 1.2}) {
            const double n = negativity_of(family, alpha, std::nullopt, 0.0, 1.0, ab1);
            worst = std::max(worst, std::abs(n - 0.5 * std::abs(std::sin(2.0 * alpha))));
        }
    for (double f : {0.2, 1.0 / 3.0, 0.5, 0.65, 0.95}) {
        const double n = negativity_of(Family::werner, kQuarterPi, f, 0.0, 1.0, ab1);
        worst = std::max(worst, std::abs(n - std::max(0.0, (3.0 * f - 1.0) / 4.0)));
    }
    items.push_back(
        make("scenario/zero-acceleration-limits", worst < kConvergenceTol, worst, kConvergenceTol));
}

void check_phi_star_separability(std::vector<CheckResult>& items) {
    double worst = 0.0;
    for (const DetectorConfig& config : all_detector_configs()) {
        if (!config.distinguishing) continue;
        for (double alpha : {std::numbers::pi / 18.0, 0.6, kQuarterPi})
            for (double q_r : kQrGrid)
                for (int g = 0; g <= 18; ++g)
                    worst = std::max(worst, negativity_of(Family::phi_star, alpha, std::nullopt,
                                                          kQuarterPi * g / 18, q_r, config));
    }
    items.push_back(make("scenario/phi-star-distinguishing-separability", worst < kPatternTol,
                         worst, kPatternTol));
}

std::map<std::string, double> grid_max_by_config(Family family, double alpha, double q_r,
                                                 int gamma_points = 181) {
    std::map<std::string, double> maxima;
    for (const DetectorConfig& config : all_detector_configs()) {
        if (!config.distinguishing) continue;
        double peak = 0.0;
        for (int g = 0; g < gamma_points; ++g)
            peak = std::max(peak, negativity_of(family, alpha, std::nullopt,
                                                kQuarterPi * g / (gamma_points - 1), q_r, config));
        maxima[config.name()] = peak;
    }
    return maxima;
}

std::string pattern_to_string(const std::map<std::string, double>& maxima) {
    std::ostringstream os;
    for (const auto& [name, peak] : maxima)
        os << name << (peak >= kPatternTol ? " nonzero" : " zero") << " (max " << peak << "); ";
    return os.str();
}

void check_zero_patterns(std::vector<CheckResult>& items) {
    using Pattern = std::set<std::string>;
    const auto nonzero_set = [](const std::map<std::string, double>& maxima) {
        Pattern p;
        for (const auto& [name, peak] : maxima)
            if (peak >= kPatternTol) p.insert(name);
        return p;
    };

    {
        const auto maxima = grid_max_by_config(Family::phi_plus, kQuarterPi, 0.5);
        const Pattern expected{"AB_I-particle", "AB_I-antiparticle", "AB_II-particle"};
        items.push_back(make("scenario/pattern-phi-plus-qr-0.5", nonzero_set(maxima) == expected,
                             maxima.at("AB_II-antiparticle"), kPatternTol,
                             pattern_to_string(maxima)));
    }
    {
        const auto maxima = grid_max_by_config(Family::phi_minus, kQuarterPi, 1.0);
        const Pattern expected{"AB_I-antiparticle", "AB_II-particle"};
        items.push_back(make("scenario/pattern-phi-minus-qr-1", nonzero_set(maxima) == expected,
                             std::max(maxima.at("AB_I-particle"),
                                      maxima.at("AB_II-antiparticle")),
                             kPatternTol, pattern_to_string(maxima)));
    }
    {
        // The published text names three nonzero configurations at q_R = 3/4;
        // the construction yields a genuine fourth (Alice-antiBob particle-II,
        // peak ~1.4e-3, invisible at figure scale). Reported as a flagged
        // discrepancy when the measured pattern is exactly text + that fourth
        // curve; anything else fails.
        const auto maxima = grid_max_by_config(Family::phi_minus, kQuarterPi, 0.75);
        const Pattern text_pattern{"AB_I-particle", "AB_I-antiparticle", "AB_II-antiparticle"};
        const Pattern with_fourth{"AB_I-particle", "AB_I-antiparticle", "AB_II-particle",
                                  "AB_II-antiparticle"};
        const Pattern actual = nonzero_set(maxima);
        CheckResult result;
        result.name = "scenario/pattern-phi-minus-qr-0.75";
        result.threshold = kPatternTol;
        result.measured = maxima.at("AB_II-particle");
        if (actual == text_pattern) {
            result.status = CheckStatus::pass;
        } else if (actual == with_fourth) {
            result.status = CheckStatus::flagged;
            result.note = "source text names three nonzero configs; construction adds "
                          "AB_II-particle with grid max " +
                          format_real(maxima.at("AB_II-particle")) + " — " +
                          pattern_to_string(maxima);
        } else {
            result.status = CheckStatus::fail;
            result.note = pattern_to_string(maxima);
        }
        items.push_back(result);
    }
}

void check_scenario_matrix_sanity(std::vector<CheckResult>& items) {
    // PT involution, Hermiticity preservation and the (d-1)/2 negativity
    // bound, on actual scenario outputs rather than synthetic matrices.
    double worst_involution = 0.0, worst_herm = 0.0, worst_bound = 0.0, trace_dev = 0.0;
    for (const FamilyCase& fc : family_cases())
        for (const DetectorConfig& config : all_detector_configs())
            for (double gamma : {0.0, 0.31, kQuarterPi})
                for (double q_r : {0.25, 0.73, 1.0}) {
                    const ScenarioResult result =
                        scenario_negativity({fc.family, fc.alpha, fc.fidelity, gamma, q_r}, config);
                    const auto cut = alice_cut(result.reduced);
                    const DensityMatrix pt = partial_transpose(result.reduced, cut.alice_factors);
                    const DensityMatrix back = partial_transpose(pt, cut.alice_factors);
                    worst_involution = std::max(
                        worst_involution, ComplexMatrix::max_abs_diff(back.mat, result.reduced.mat));
                    worst_herm = std::max(worst_herm, pt.mat.hermiticity_error());
                    trace_dev = std::max(trace_dev, std::abs(pt.mat.trace() - cplx{1.0}));
                    worst_bound = std::max(worst_bound, result.negativity - 0.5);
                }
    items.push_back(make("scenario/pt-involution-and-hermiticity",
                         worst_involution == 0.0 && worst_herm <= 1e-14 && trace_dev <= 1e-12,
                         std::max(worst_involution, worst_herm), 1e-14));
    items.push_back(make("scenario/negativity-bound-(d-1)/2", worst_bound <= 1e-12, worst_bound,
                         1e-12, "max N - 1/2 over all scenario outputs"));
}

void check_monotonicity(std::vector<CheckResult>& items) {
    const DetectorConfig ab1 = detector_from_name("AB_I");
    const DetectorConfig ab2 = detector_from_name("AB_II");
    double worst_increase = 0.0, worst_decrease = 0.0;
    double prev_1 = -1.0, prev_2 = -1.0;
    for (int g = 0; g < 181; ++g) {
        const double gamma = kQuarterPi * g / 180;
        const double n1 = negativity_of(Family::phi_plus, kQuarterPi, std::nullopt, gamma, 1.0, ab1);
        const double n2 = negativity_of(Family::phi_plus, kQuarterPi, std::nullopt, gamma, 1.0, ab2);
        if (g > 0) {
            worst_increase = std::max(worst_increase, n1 - prev_1);  // AB_I must not increase
            worst_decrease = std::max(worst_decrease, prev_2 - n2);  // AB_II must not decrease
        }
        prev_1 = n1;
        prev_2 = n2;
    }
    const double worst = std::max(worst_increase, worst_decrease);
    items.push_back(make("scenario/phi-plus-monotonicity-qr-1", worst <= kMonotonicityTol, worst,
                         kMonotonicityTol));
}

void check_csv_determinism(std::vector<CheckResult>& items) {
    SweepConfig cfg = preset("fig2");
    cfg.grid.steps = 19;
    std::ostringstream first, second, parallel;
    write_csv(first, evaluate_sweep(cfg));
    write_csv(second, evaluate_sweep(cfg));
    cfg.workers = 4;
    write_csv(parallel, evaluate_sweep(cfg));
    const bool ok = first.str() == second.str() && first.str() == parallel.str();
    items.push_back(make("csv/deterministic-output", ok, ok ? 0.0 : 1.0, 0.0,
                         "byte comparison, serial and 4 workers"));
}

void check_oracle(std::vector<CheckResult>& items, std::vector<TableReport>& oracle_out) {
    oracle_out = run_oracle();
    for (const TableReport& report : oracle_out) {
        CheckResult result;
        result.name = std::string("oracle/") + report.table->name;
        result.measured = report.diff.max_abs_dev;
        result.threshold = kOracleTolerance;
        if (report.diff.empty()) {
            // A pair-symmetry flag with an empty diff means the partner table
            // carries the misprint; this one is empirically clean.
            result.status = CheckStatus::pass;
            if (report.flagged())
                result.note = "pair-symmetry flag resolved against the construction: the "
                              "discrepancy lies in the partner table";
        } else if (report.flagged() && report.diff.entries.size() <= 6) {
            result.status = CheckStatus::flagged;
            std::ostringstream note;
            note << "suspected misprint(s); " << report.diff.entries.size()
                 << " entries deviate, rest matches";
            for (const std::string& n : report.checks.notes) note << "; " << n;
            result.note = note.str();
        } else {
            result.status = CheckStatus::fail;
            result.note = report.flagged() ? "flagged but diff not localized"
                                           : "matches no printed-table check yet deviates";
        }
        items.push_back(result);
    }
}

}  // namespace

int VerifyReport::failures() const {
    return static_cast<int>(
        std::count_if(items.begin(), items.end(),
                      [](const CheckResult& r) { return r.status == CheckStatus::fail; }));
}

int VerifyReport::flags() const {
    return static_cast<int>(
        std::count_if(items.begin(), items.end(),
                      [](const CheckResult& r) { return r.status == CheckStatus::flagged; }));
}

VerifyReport run_verify(SignConvention ordering) {
    VerifyReport report;
    report.ordering = ordering;
    check_fock_algebra(report.items, ordering);
    check_operator_reproduction(report.items, ordering);
    check_state_properties(report.items);
    check_convergence(report.items);
    check_zero_acceleration(report.items);
    check_phi_star_separability(report.items);
    check_zero_patterns(report.items);
    check_scenario_matrix_sanity(report.items);
    check_monotonicity(report.items);
    check_oracle(report.items, report.oracle);
    check_csv_determinism(report.items);
    return report;
}

void write_verify_text(std::ostream& os, const VerifyReport& report) {
    os << "verification suite (ordering: "
       << (report.ordering == SignConvention::canonical ? "canonical" : "alternate") << ")\n";
    for (const CheckResult& item : report.items) {
        const char* status = item.status == CheckStatus::pass      ? "PASS   "
                             : item.status == CheckStatus::flagged ? "FLAGGED"
                                                                   : "FAIL   ";
        os << "  [" << status << "] " << item.name << "  measured " << format_real(item.measured)
           << " (threshold " << format_real(item.threshold) << ")";
        if (!item.note.empty()) os << "\n            " << item.note;
        os << "\n";
    }
    os << report.failures() << " failed, " << report.flags() << " flagged, "
       << report.items.size() << " total\n\n";
    write_oracle_report_text(os, report.oracle);
}

void write_verify_json(std::ostream& os, const VerifyReport& report) {
    nlohmann::json root;
    root["ordering"] = report.ordering == SignConvention::canonical ? "canonical" : "alternate";
    root["failures"] = report.failures();
    root["flagged"] = report.flags();
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& item : report.items)
        checks.push_back({{"name", item.name},
                          {"status", item.status == CheckStatus::pass      ? "pass"
                                     : item.status == CheckStatus::flagged ? "flagged"
                                                                           : "fail"},
                          {"measured", item.measured},
                          {"threshold", item.threshold},
                          {"note", item.note}});
    root["checks"] = checks;

    std::ostringstream oracle_json;
    write_oracle_report_json(oracle_json, report.oracle);
    root["oracle"] = nlohmann::json::parse(oracle_json.str());
    os << root.dump(2) << "\n";
}

}  // namespace unruhsim
