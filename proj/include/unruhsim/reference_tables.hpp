// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unruhsim/matrix.hpp"
#include "unruhsim/scenarios.hpp"

namespace unruhsim {

struct TableParams {
    double alpha;
    double gamma;
    double q_r;
    double q_l;
    double fidelity;
};

using CoeffFn = double (*)(const TableParams&);

/// One |bra><ket| term of a published closed-form reduced density matrix.
/// Labels are 3-bit: (Alice << 2) | (first Bob mode << 1) | second Bob mode,
/// with Alice's +/- label mapped to 0/1 for the phi-star family.
struct OracleTerm {
    int bra;
    int ket;
    const char* symbol;
    CoeffFn coeff;
};

/// A published reduced-matrix expression, transcribed exactly as printed —
/// suspected misprints included. The constructed matrix is ground truth;
/// these tables are test vectors.
struct ClosedFormTable {
    Family family;
    Region region;
    const char* name;
    bool alice_plus_minus;
    std::vector<OracleTerm> terms;
};

const std::vector<ClosedFormTable>& printed_tables();
const ClosedFormTable& printed_table(Family family, Region region);

ComplexMatrix assemble(const ClosedFormTable& table, const TableParams& params);

/// Sanity checks computable from the printed table alone (no constructed
/// knowledge): trace normalization over random parameters, no duplicated
/// (bra, ket) labels, Hermitian pairing, and consistency with the partner
/// table under the exact q_R <-> q_L relabeling symmetry of the construction
/// (phi-plus/I <-> phi-minus/II and phi-plus/II <-> phi-minus/I with the two
/// Bob labels swapped; phi-star/I <-> phi-star/II with labels fixed).
struct TableChecks {
    bool trace_ok = true;
    bool labels_ok = true;
    bool hermitian_ok = true;
    bool symmetry_ok = true;
    std::vector<std::string> notes;

    bool all_ok() const { return trace_ok && labels_ok && hermitian_ok && symmetry_ok; }
};

TableChecks run_table_checks(const ClosedFormTable& table);

struct DiffEntry {
    int bra = 0;
    int ket = 0;
    std::string symbol;      // printed coefficient(s) at this position
    double printed = 0.0;
    double constructed = 0.0;
    double worst_dev = 0.0;
    TableParams at{};        // parameter point achieving worst_dev
};

struct DiffReport {
    std::string table;
    double max_abs_dev = 0.0;
    std::vector<DiffEntry> entries;  // positions deviating beyond 1e-10

    bool empty() const { return entries.empty(); }
};

/// Entrywise comparison of the assembled table against the constructed
/// reduced matrix at one parameter point.
DiffReport diff_against_constructed(const ClosedFormTable& table, double alpha, double gamma,
                                    double q_r, double fidelity);

/// Same comparison aggregated over a parameter grid; per-entry worst
/// deviations are reported.
DiffReport diff_over_grid(const ClosedFormTable& table);

struct TableReport {
    const ClosedFormTable* table = nullptr;
    TableChecks checks;
    DiffReport diff;

    bool flagged() const { return !checks.all_ok(); }
};

std::vector<TableReport> run_oracle(/*grid diff per table*/);

void write_oracle_report_text(std::ostream& os, const std::vector<TableReport>& reports);
void write_oracle_report_json(std::ostream& os, const std::vector<TableReport>& reports);

std::string basis_label(int label3, bool alice_plus_minus);

inline constexpr double kOracleTolerance = 1e-10;

}  // namespace unruhsim
