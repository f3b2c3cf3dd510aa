// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "unruhsim/reference_tables.hpp"

using namespace unruhsim;

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

TableParams params_of(double alpha, double gamma, double q_r, double fidelity = 0.0) {
    return {alpha, gamma, q_r, std::sqrt(std::max(0.0, 1.0 - q_r * q_r)), fidelity};
}

}  // namespace

TEST_CASE("eight printed tables exist, Hermitian by pairing") {
    CHECK(printed_tables().size() == 8);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const ClosedFormTable& table : printed_tables())
        for (int draw = 0; draw < 10; ++draw) {
            const TableParams p =
                params_of(unit(rng) * 1.5, unit(rng) * kQuarterPi, unit(rng), unit(rng));
            CHECK(assemble(table, p).hermiticity_error() <= 1e-14);
        }
}

TEST_CASE("phi-plus AB_I at gamma=0, qR=1, alpha=pi/4 is the Bell projector") {
    const ComplexMatrix m =
        assemble(printed_table(Family::phi_plus, Region::I), params_of(kQuarterPi, 0.0, 1.0));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const bool in_span = (i == 0b000 || i == 0b110) && (j == 0b000 || j == 0b110);
            CHECK(m(i, j).real() == doctest::Approx(in_span ? 0.5 : 0.0).epsilon(1e-15));
        }
}

TEST_CASE("werner table at F=1 equals the phi-plus table at alpha=pi/4") {
    for (double gamma : {0.0, 0.4, kQuarterPi})
        for (double q_r : {0.3, 0.73, 1.0}) {
            const ComplexMatrix w = assemble(printed_table(Family::werner, Region::I),
                                             params_of(kQuarterPi, gamma, q_r, 1.0));
            const ComplexMatrix phi = assemble(printed_table(Family::phi_plus, Region::I),
                                               params_of(kQuarterPi, gamma, q_r));
            CHECK(ComplexMatrix::max_abs_diff(w, phi) <= 1e-14);

            // Region II: the printed phi-plus table carries the misprinted
            // |110><110| coefficient while the werner table embeds the
            // corrected one, so at F=1 they differ at that cell only.
            const ComplexMatrix w2 = assemble(printed_table(Family::werner, Region::II),
                                              params_of(kQuarterPi, gamma, q_r, 1.0));
            const ComplexMatrix phi2 = assemble(printed_table(Family::phi_plus, Region::II),
                                                params_of(kQuarterPi, gamma, q_r));
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 8; ++j)
                    if (i != 0b110 || j != 0b110)
                        CHECK(std::abs(w2(i, j) - phi2(i, j)) <= 1e-14);
        }
}

TEST_CASE("trace normalization holds for every table except phi-plus AB_II") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const ClosedFormTable& table : printed_tables()) {
        double worst = 0.0;
        for (int draw = 0; draw < 50; ++draw) {
            const TableParams p = params_of(unit(rng) * std::numbers::pi / 2.0,
                                            unit(rng) * kQuarterPi, unit(rng), unit(rng));
            worst = std::max(worst, std::abs(assemble(table, p).trace() - cplx{1.0}));
        }
        if (table.family == Family::phi_plus && table.region == Region::II)
            CHECK(worst > 1e-3);
        else
            CHECK(worst <= 1e-10);
    }
}

TEST_CASE("printed-table sanity checks flag exactly the three misprinted tables") {
    for (const ClosedFormTable& table : printed_tables()) {
        const TableChecks checks = run_table_checks(table);
        INFO(table.name);
        CHECK(checks.hermitian_ok);
        if (table.family == Family::phi_plus && table.region == Region::II) {
            CHECK(!checks.trace_ok);
            CHECK(!checks.symmetry_ok);
        } else if (table.family == Family::phi_minus && table.region == Region::I) {
            CHECK(checks.trace_ok);  // the mislabeled diagonal conserves trace
            CHECK(!checks.labels_ok);
            CHECK(!checks.symmetry_ok);
        } else if (table.family == Family::phi_minus && table.region == Region::II) {
            CHECK(checks.trace_ok);
            CHECK(checks.labels_ok);
            CHECK(!checks.symmetry_ok);
        } else if (table.family == Family::phi_plus && table.region == Region::I) {
            CHECK(checks.trace_ok);
            CHECK(checks.labels_ok);
            // Flagged only through its misprinted partner.
            CHECK(!checks.symmetry_ok);
        } else {
            CHECK(checks.all_ok());
        }
    }
}

TEST_CASE("diff against constructed: clean tables give empty reports") {
    for (const ClosedFormTable& table : printed_tables()) {
        if (table.family == Family::phi_minus) continue;
        if (table.family == Family::phi_plus && table.region == Region::II) continue;
        const DiffReport report = diff_against_constructed(table, 0.9, 0.5, 0.73, 0.65);
        INFO(table.name);
        CHECK(report.empty());
        CHECK(report.max_abs_dev <= 1e-12);
    }
}

TEST_CASE("diff localization: phi-plus AB_II deviates only at |110><110|") {
    const DiffReport report = diff_over_grid(printed_table(Family::phi_plus, Region::II));
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].bra == 0b110);
    CHECK(report.entries[0].ket == 0b110);
    CHECK(report.max_abs_dev > 1e-3);
}

TEST_CASE("diff localization: phi-minus AB_I deviates on the two diagonal cells") {
    const DiffReport report = diff_over_grid(printed_table(Family::phi_minus, Region::I));
    REQUIRE(report.entries.size() == 2);
    for (const DiffEntry& e : report.entries) {
        CHECK(e.bra == e.ket);
        CHECK((e.bra == 0b100 || e.bra == 0b101));
    }
}

TEST_CASE("diff localization: phi-minus AB_II deviates on three Hermitian pairs") {
    const DiffReport report = diff_over_grid(printed_table(Family::phi_minus, Region::II));
    CHECK(report.entries.size() == 6);
    for (const DiffEntry& e : report.entries) {
        CHECK(e.bra != e.ket);
        const auto pair = std::minmax(e.bra, e.ket);
        const bool known = (pair == std::minmax(0b010, 0b100)) ||
                           (pair == std::minmax(0b010, 0b111)) ||
                           (pair == std::minmax(0b011, 0b101));
        CHECK(known);
    }
}

TEST_CASE("identical matrices produce an empty report") {
    const DiffReport report =
        diff_against_constructed(printed_table(Family::phi_star, Region::I), 0.6, 0.3, 0.5, 0.0);
    CHECK(report.empty());
}

TEST_CASE("report writers emit both formats") {
    const auto reports = run_oracle();
    std::ostringstream text, json;
    write_oracle_report_text(text, reports);
    write_oracle_report_json(json, reports);
    CHECK(text.str().find("phi-minus/AB_II") != std::string::npos);
    CHECK(text.str().find("MATCHED") != std::string::npos);
    CHECK(json.str().find("\"printed\"") != std::string::npos);
    CHECK(json.str().find("\"constructed\"") != std::string::npos);
    CHECK(basis_label(0b101, true) == "-01");
    CHECK(basis_label(0b101, false) == "101");
}
