// Copyright 2026 The unruhsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "unruhsim/reference_tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace unruhsim {

namespace {

double ca2(const TableParams& p) { return std::cos(p.alpha) * std::cos(p.alpha); }
double sa2(const TableParams& p) { return std::sin(p.alpha) * std::sin(p.alpha); }
double s2a(const TableParams& p) { return std::sin(2.0 * p.alpha); }
double cg(const TableParams& p) { return std::cos(p.gamma); }
double sg(const TableParams& p) { return std::sin(p.gamma); }
double c2g(const TableParams& p) { return std::cos(2.0 * p.gamma); }
double s2g(const TableParams& p) { return std::sin(2.0 * p.gamma); }

// Appends a Hermitian pair |bra><ket| + |ket><bra| with a common coefficient.
void pair_terms(std::vector<OracleTerm>& terms, int bra, int ket, const char* symbol, CoeffFn fn) {
    terms.push_back({bra, ket, symbol, fn});
    terms.push_back({ket, bra, symbol, fn});
}

std::vector<ClosedFormTable> build_tables() {
    std::vector<ClosedFormTable> tables;

    {  // rho^{Phi+}_{AB_I}
        std::vector<OracleTerm> t;
        t.push_back({0b000, 0b000, "cos^2a cos^4g",
                     [](const TableParams& p) { return ca2(p) * std::pow(cg(p), 4); }});
        pair_terms(t, 0b000, 0b110, "(qR/2) sin2a cos^3g",
                   [](const TableParams& p) { return 0.5 * p.q_r * s2a(p) * std::pow(cg(p), 3); });
        t.push_back({0b100, 0b100, "qL^2 sin^2a cos^2g",
                     [](const TableParams& p) { return p.q_l * p.q_l * sa2(p) * cg(p) * cg(p); }});
        t.push_back({0b110, 0b110, "1/2(1+(1-2qL^2)cos2g) sin^2a",
                     [](const TableParams& p) {
                         return 0.5 * (1.0 + (1.0 - 2.0 * p.q_l * p.q_l) * c2g(p)) * sa2(p);
                     }});
        pair_terms(t, 0b001, 0b100, "-(qL/2) sin2a cos^2g sing",
                   [](const TableParams& p) { return -0.5 * p.q_l * s2a(p) * cg(p) * cg(p) * sg(p); });
        pair_terms(t, 0b100, 0b111, "-(qR qL/2) sin^2a sin2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * p.q_l * sa2(p) * s2g(p); });
        t.push_back({0b001, 0b001, "1/4 cos^2a sin^2 2g",
                     [](const TableParams& p) { return 0.25 * ca2(p) * s2g(p) * s2g(p); }});
        t.push_back({0b010, 0b010, "1/4 cos^2a sin^2 2g",
                     [](const TableParams& p) { return 0.25 * ca2(p) * s2g(p) * s2g(p); }});
        pair_terms(t, 0b001, 0b111, "(qR/2) sin2a cosg sin^2g",
                   [](const TableParams& p) { return 0.5 * p.q_r * s2a(p) * cg(p) * sg(p) * sg(p); });
        t.push_back({0b111, 0b111, "qR^2 sin^2a sin^2g",
                     [](const TableParams& p) { return p.q_r * p.q_r * sa2(p) * sg(p) * sg(p); }});
        pair_terms(t, 0b011, 0b110, "(qL/2) sin2a sin^3g",
                   [](const TableParams& p) { return 0.5 * p.q_l * s2a(p) * std::pow(sg(p), 3); });
        t.push_back({0b011, 0b011, "cos^2a sin^4g",
                     [](const TableParams& p) { return ca2(p) * std::pow(sg(p), 4); }});
        tables.push_back({Family::phi_plus, Region::I, "phi-plus/AB_I", false, std::move(t)});
    }

    {  // rho^{Phi+}_{AB_II}
        std::vector<OracleTerm> t;
        t.push_back({0b000, 0b000, "cos^2a cos^4g",
                     [](const TableParams& p) { return ca2(p) * std::pow(cg(p), 4); }});
        pair_terms(t, 0b000, 0b110, "(qL/2) sin2a cos^3g",
                   [](const TableParams& p) { return 0.5 * p.q_l * s2a(p) * std::pow(cg(p), 3); });
        t.push_back({0b100, 0b100, "qR^2 sin^2a cos^2g",
                     [](const TableParams& p) { return p.q_r * p.q_r * sa2(p) * cg(p) * cg(p); }});
        // Printed with the same (1-2qL^2) factor as the AB_I line; breaks
        // trace normalization.
        t.push_back({0b110, 0b110, "1/2(1+(1-2qL^2)cos2g) sin^2a",
                     [](const TableParams& p) {
                         return 0.5 * (1.0 + (1.0 - 2.0 * p.q_l * p.q_l) * c2g(p)) * sa2(p);
                     }});
        pair_terms(t, 0b001, 0b100, "(qR/2) sin2a cos^2g sing",
                   [](const TableParams& p) { return 0.5 * p.q_r * s2a(p) * cg(p) * cg(p) * sg(p); });
        pair_terms(t, 0b100, 0b111, "-(qR qL/2) sin^2a sin2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * p.q_l * sa2(p) * s2g(p); });
        t.push_back({0b001, 0b001, "1/4 cos^2a sin^2 2g",
                     [](const TableParams& p) { return 0.25 * ca2(p) * s2g(p) * s2g(p); }});
        t.push_back({0b010, 0b010, "1/4 cos^2a sin^2 2g",
                     [](const TableParams& p) { return 0.25 * ca2(p) * s2g(p) * s2g(p); }});
        pair_terms(t, 0b001, 0b111, "-(qL/2) sin2a cosg sin^2g",
                   [](const TableParams& p) { return -0.5 * p.q_l * s2a(p) * cg(p) * sg(p) * sg(p); });
        t.push_back({0b111, 0b111, "qL^2 sin^2a sin^2g",
                     [](const TableParams& p) { return p.q_l * p.q_l * sa2(p) * sg(p) * sg(p); }});
        pair_terms(t, 0b011, 0b110, "(qR/2) sin2a sin^3g",
                   [](const TableParams& p) { return 0.5 * p.q_r * s2a(p) * std::pow(sg(p), 3); });
        t.push_back({0b011, 0b011, "cos^2a sin^4g",
                     [](const TableParams& p) { return ca2(p) * std::pow(sg(p), 4); }});
        tables.push_back({Family::phi_plus, Region::II, "phi-plus/AB_II", false, std::move(t)});
    }

    {  // rho^{Phi-}_{AB_I}
        std::vector<OracleTerm> t;
        t.push_back({0b000, 0b000, "cos^2a cos^4g",
                     [](const TableParams& p) { return ca2(p) * std::pow(cg(p), 4); }});
        pair_terms(t, 0b000, 0b101, "(qR/2) sin2a cos^3g",
                   [](const TableParams& p) { return 0.5 * p.q_r * s2a(p) * std::pow(cg(p), 3); });
        // Printed against |101><101| although no |100><100| line appears;
        // duplicated label below.
        t.push_back({0b101, 0b101, "qL^2 sin^2a cos^2g",
                     [](const TableParams& p) { return p.q_l * p.q_l * sa2(p) * cg(p) * cg(p); }});
        t.push_back({0b101, 0b101, "1/2(1+(1-2qL^2)cos2g) sin^2a",
                     [](const TableParams& p) {
                         return 0.5 * (1.0 + (1.0 - 2.0 * p.q_l * p.q_l) * c2g(p)) * sa2(p);
                     }});
        pair_terms(t, 0b010, 0b100, "(qL/2) sin2a cos^2g sing",
                   [](const TableParams& p) { return 0.5 * p.q_l * s2a(p) * cg(p) * cg(p) * sg(p); });
        pair_terms(t, 0b100, 0b111, "-(qR qL/2) sin^2a sin2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * p.q_l * sa2(p) * s2g(p); });
        t.push_back({0b001, 0b001, "1/4 cos^2a sin^2 2g",
                     [](const TableParams& p) { return 0.25 * ca2(p) * s2g(p) * s2g(p); }});
        t.push_back({0b010, 0b010, "1/4 cos^2a sin^2 2g",
                     [](const TableParams& p) { return 0.25 * ca2(p) * s2g(p) * s2g(p); }});
        pair_terms(t, 0b010, 0b111, "-(qR/2) sin2a cosg sin^2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * s2a(p) * cg(p) * sg(p) * sg(p); });
        t.push_back({0b111, 0b111, "qR^2 sin^2a sin^2g",
                     [](const TableParams& p) { return p.q_r * p.q_r * sa2(p) * sg(p) * sg(p); }});
        pair_terms(t, 0b011, 0b101, "(qL/2) sin2a sin^3g",
                   [](const TableParams& p) { return 0.5 * p.q_l * s2a(p) * std::pow(sg(p), 3); });
        t.push_back({0b011, 0b011, "cos^2a sin^4g",
                     [](const TableParams& p) { return ca2(p) * std::pow(sg(p), 4); }});
        tables.push_back({Family::phi_minus, Region::I, "phi-minus/AB_I", false, std::move(t)});
    }

    {  // rho^{Phi-}_{AB_II}
        std::vector<OracleTerm> t;
        t.push_back({0b000, 0b000, "cos^2a cos^4g",
                     [](const TableParams& p) { return ca2(p) * std::pow(cg(p), 4); }});
        pair_terms(t, 0b000, 0b101, "(qL/2) sin2a cos^3g",
                   [](const TableParams& p) { return 0.5 * p.q_l * s2a(p) * std::pow(cg(p), 3); });
        t.push_back({0b100, 0b100, "qR^2 sin^2a cos^2g",
                     [](const TableParams& p) { return p.q_r * p.q_r * sa2(p) * cg(p) * cg(p); }});
        t.push_back({0b101, 0b101, "1/2(1+(1-2qR^2)cos2g) sin^2a",
                     [](const TableParams& p) {
                         return 0.5 * (1.0 + (1.0 - 2.0 * p.q_r * p.q_r) * c2g(p)) * sa2(p);
                     }});
        pair_terms(t, 0b010, 0b100, "-(qL/2) sin2a cos^2g sing",
                   [](const TableParams& p) { return -0.5 * p.q_l * s2a(p) * cg(p) * cg(p) * sg(p); });
        pair_terms(t, 0b100, 0b111, "-(qR qL/2) sin^2a sin2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * p.q_l * sa2(p) * s2g(p); });
        t.push_back({0b001, 0b001, "1/4 cos^2a sin^2 2g",
                     [](const TableParams& p) { return 0.25 * ca2(p) * s2g(p) * s2g(p); }});
        t.push_back({0b010, 0b010, "1/4 cos^2a sin^2 2g",
                     [](const TableParams& p) { return 0.25 * ca2(p) * s2g(p) * s2g(p); }});
        pair_terms(t, 0b010, 0b111, "(qR/2) sin2a cosg sin^2g",
                   [](const TableParams& p) { return 0.5 * p.q_r * s2a(p) * cg(p) * sg(p) * sg(p); });
        t.push_back({0b111, 0b111, "qL^2 sin^2a sin^2g",
                     [](const TableParams& p) { return p.q_l * p.q_l * sa2(p) * sg(p) * sg(p); }});
        pair_terms(t, 0b011, 0b101, "(qL/2) sin2a sin^3g",
                   [](const TableParams& p) { return 0.5 * p.q_l * s2a(p) * std::pow(sg(p), 3); });
        t.push_back({0b011, 0b011, "cos^2a sin^4g",
                     [](const TableParams& p) { return ca2(p) * std::pow(sg(p), 4); }});
        tables.push_back({Family::phi_minus, Region::II, "phi-minus/AB_II", false, std::move(t)});
    }

    {  // rho^{Phi*}_{AB_I}; Alice labels |+> -> 0, |-> -> 1
        std::vector<OracleTerm> t;
        t.push_back({0b000, 0b000, "qL^2 cos^2a cos^2g",
                     [](const TableParams& p) { return p.q_l * p.q_l * ca2(p) * cg(p) * cg(p); }});
        t.push_back({0b010, 0b010, "1/2(1+(1-2qL^2)cos2g) cos^2a",
                     [](const TableParams& p) {
                         return 0.5 * (1.0 + (1.0 - 2.0 * p.q_l * p.q_l) * c2g(p)) * ca2(p);
                     }});
        pair_terms(t, 0b010, 0b101, "1/4(1+(1-2qL^2)cos2g) sin2a",
                   [](const TableParams& p) {
                       return 0.25 * (1.0 + (1.0 - 2.0 * p.q_l * p.q_l) * c2g(p)) * s2a(p);
                   });
        t.push_back({0b101, 0b101, "1/2(1+(1-2qL^2)cos2g) sin^2a",
                     [](const TableParams& p) {
                         return 0.5 * (1.0 + (1.0 - 2.0 * p.q_l * p.q_l) * c2g(p)) * sa2(p);
                     }});
        t.push_back({0b100, 0b100, "qL^2 sin^2a cos^2g",
                     [](const TableParams& p) { return p.q_l * p.q_l * sa2(p) * cg(p) * cg(p); }});
        pair_terms(t, 0b000, 0b011, "-(qR qL/2) cos^2a sin2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * p.q_l * ca2(p) * s2g(p); });
        pair_terms(t, 0b100, 0b111, "-(qR qL/2) sin^2a sin2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * p.q_l * sa2(p) * s2g(p); });
        t.push_back({0b011, 0b011, "qR^2 cos^2a sin^2g",
                     [](const TableParams& p) { return p.q_r * p.q_r * ca2(p) * sg(p) * sg(p); }});
        t.push_back({0b111, 0b111, "qR^2 sin^2a sin^2g",
                     [](const TableParams& p) { return p.q_r * p.q_r * sa2(p) * sg(p) * sg(p); }});
        tables.push_back({Family::phi_star, Region::I, "phi-star/AB_I", true, std::move(t)});
    }

    {  // rho^{Phi*}_{AB_II}
        std::vector<OracleTerm> t;
        t.push_back({0b000, 0b000, "qR^2 cos^2a cos^2g",
                     [](const TableParams& p) { return p.q_r * p.q_r * ca2(p) * cg(p) * cg(p); }});
        t.push_back({0b010, 0b010, "1/2(1+(1-2qR^2)cos2g) cos^2a",
                     [](const TableParams& p) {
                         return 0.5 * (1.0 + (1.0 - 2.0 * p.q_r * p.q_r) * c2g(p)) * ca2(p);
                     }});
        pair_terms(t, 0b010, 0b101, "1/4(1+(1-2qR^2)cos2g) sin2a",
                   [](const TableParams& p) {
                       return 0.25 * (1.0 + (1.0 - 2.0 * p.q_r * p.q_r) * c2g(p)) * s2a(p);
                   });
        t.push_back({0b101, 0b101, "1/2(1+(1-2qR^2)cos2g) sin^2a",
                     [](const TableParams& p) {
                         return 0.5 * (1.0 + (1.0 - 2.0 * p.q_r * p.q_r) * c2g(p)) * sa2(p);
                     }});
        t.push_back({0b100, 0b100, "qR^2 sin^2a cos^2g",
                     [](const TableParams& p) { return p.q_r * p.q_r * sa2(p) * cg(p) * cg(p); }});
        pair_terms(t, 0b000, 0b011, "-(qR qL/2) cos^2a sin2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * p.q_l * ca2(p) * s2g(p); });
        pair_terms(t, 0b100, 0b111, "-(qR qL/2) sin^2a sin2g",
                   [](const TableParams& p) { return -0.5 * p.q_r * p.q_l * sa2(p) * s2g(p); });
        t.push_back({0b011, 0b011, "qL^2 cos^2a sin^2g",
                     [](const TableParams& p) { return p.q_l * p.q_l * ca2(p) * sg(p) * sg(p); }});
        t.push_back({0b111, 0b111, "qL^2 sin^2a sin^2g",
                     [](const TableParams& p) { return p.q_l * p.q_l * sa2(p) * sg(p) * sg(p); }});
        tables.push_back({Family::phi_star, Region::II, "phi-star/AB_II", true, std::move(t)});
    }

    {  // rho^{W}_{AB_I}
        std::vector<OracleTerm> t;
        pair_terms(t, 0b000, 0b110, "(F qR/2) cos^3g",
                   [](const TableParams& p) { return 0.5 * p.fidelity * p.q_r * std::pow(cg(p), 3); });
        t.push_back({0b100, 0b100, "1/8 cos^2g (3-2qR^2+F(1-2qR^2)+(1-F)cos2g)",
                     [](const TableParams& p) {
                         const double qr2 = p.q_r * p.q_r;
                         return 0.125 * cg(p) * cg(p) *
                                (3.0 - 2.0 * qr2 + p.fidelity * (1.0 - 2.0 * qr2) +
                                 (1.0 - p.fidelity) * c2g(p));
                     }});
        t.push_back({0b000, 0b000, "1/8 cos^2g (3-2qR^2-F(1-2qR^2)+(1+F)cos2g)",
                     [](const TableParams& p) {
                         const double qr2 = p.q_r * p.q_r;
                         return 0.125 * cg(p) * cg(p) *
                                (3.0 - 2.0 * qr2 - p.fidelity * (1.0 - 2.0 * qr2) +
                                 (1.0 + p.fidelity) * c2g(p));
                     }});
        pair_terms(t, 0b001, 0b100, "-(F qL/2) cos^2g sing",
                   [](const TableParams& p) {
                       return -0.5 * p.fidelity * p.q_l * cg(p) * cg(p) * sg(p);
                   });
        pair_terms(t, 0b001, 0b111, "(F qR/2) cosg sin^2g",
                   [](const TableParams& p) {
                       return 0.5 * p.fidelity * p.q_r * cg(p) * sg(p) * sg(p);
                   });
        pair_terms(t, 0b011, 0b110, "(F qL/2) sin^3g",
                   [](const TableParams& p) { return 0.5 * p.fidelity * p.q_l * std::pow(sg(p), 3); });
        t.push_back({0b111, 0b111, "1/4 sin^2g ((1+F)qR^2+(1-F)sin^2g)",
                     [](const TableParams& p) {
                         return 0.25 * sg(p) * sg(p) *
                                ((1.0 + p.fidelity) * p.q_r * p.q_r +
                                 (1.0 - p.fidelity) * sg(p) * sg(p));
                     }});
        t.push_back({0b011, 0b011, "1/4 sin^2g ((1-F)qR^2+(1+F)sin^2g)",
                     [](const TableParams& p) {
                         return 0.25 * sg(p) * sg(p) *
                                ((1.0 - p.fidelity) * p.q_r * p.q_r +
                                 (1.0 + p.fidelity) * sg(p) * sg(p));
                     }});
        pair_terms(t, 0b000, 0b011, "-1/8(1-F) qL qR sin2g",
                   [](const TableParams& p) {
                       return -0.125 * (1.0 - p.fidelity) * p.q_l * p.q_r * s2g(p);
                   });
        pair_terms(t, 0b100, 0b111, "-1/8(1+F) qL qR sin2g",
                   [](const TableParams& p) {
                       return -0.125 * (1.0 + p.fidelity) * p.q_l * p.q_r * s2g(p);
                   });
        t.push_back({0b101, 0b101, "1/16(1-F) sin^2 2g",
                     [](const TableParams& p) {
                         return 0.0625 * (1.0 - p.fidelity) * s2g(p) * s2g(p);
                     }});
        t.push_back({0b001, 0b001, "1/16(1+F) sin^2 2g",
                     [](const TableParams& p) {
                         return 0.0625 * (1.0 + p.fidelity) * s2g(p) * s2g(p);
                     }});
        t.push_back({0b110, 0b110, "1/16(2(1+F)-2(1+F)(1-2qR^2)cos2g+(1-F)sin^2 2g)",
                     [](const TableParams& p) {
                         const double w = 1.0 + p.fidelity;
                         return 0.0625 * (2.0 * w -
                                          2.0 * w * (1.0 - 2.0 * p.q_r * p.q_r) * c2g(p) +
                                          (1.0 - p.fidelity) * s2g(p) * s2g(p));
                     }});
        t.push_back({0b010, 0b010, "1/16(2(1-F)-2(1-F)(1-2qR^2)cos2g+(1+F)sin^2 2g)",
                     [](const TableParams& p) {
                         const double w = 1.0 - p.fidelity;
                         return 0.0625 * (2.0 * w -
                                          2.0 * w * (1.0 - 2.0 * p.q_r * p.q_r) * c2g(p) +
                                          (1.0 + p.fidelity) * s2g(p) * s2g(p));
                     }});
        tables.push_back({Family::werner, Region::I, "werner/AB_I", false, std::move(t)});
    }

    {  // rho^{W}_{AB_II}
        std::vector<OracleTerm> t;
        pair_terms(t, 0b000, 0b110, "(F qL/2) cos^3g",
                   [](const TableParams& p) { return 0.5 * p.fidelity * p.q_l * std::pow(cg(p), 3); });
        t.push_back({0b111, 0b111, "1/8 sin^2g (3-2qR^2+F(1-2qR^2)-(1-F)cos2g)",
                     [](const TableParams& p) {
                         const double qr2 = p.q_r * p.q_r;
                         return 0.125 * sg(p) * sg(p) *
                                (3.0 - 2.0 * qr2 + p.fidelity * (1.0 - 2.0 * qr2) -
                                 (1.0 - p.fidelity) * c2g(p));
                     }});
        t.push_back({0b011, 0b011, "1/8 sin^2g (3-2qR^2-F(1-2qR^2)-(1+F)cos2g)",
                     [](const TableParams& p) {
                         const double qr2 = p.q_r * p.q_r;
                         return 0.125 * sg(p) * sg(p) *
                                (3.0 - 2.0 * qr2 - p.fidelity * (1.0 - 2.0 * qr2) -
                                 (1.0 + p.fidelity) * c2g(p));
                     }});
        pair_terms(t, 0b001, 0b100, "(F qR/2) cos^2g sing",
                   [](const TableParams& p) {
                       return 0.5 * p.fidelity * p.q_r * cg(p) * cg(p) * sg(p);
                   });
        pair_terms(t, 0b001, 0b111, "-(F qL/2) cosg sin^2g",
                   [](const TableParams& p) {
                       return -0.5 * p.fidelity * p.q_l * cg(p) * sg(p) * sg(p);
                   });
        pair_terms(t, 0b011, 0b110, "(F qR/2) sin^3g",
                   [](const TableParams& p) { return 0.5 * p.fidelity * p.q_r * std::pow(sg(p), 3); });
        t.push_back({0b100, 0b100, "1/4 cos^2g ((1+F)qR^2+(1-F)cos^2g)",
                     [](const TableParams& p) {
                         return 0.25 * cg(p) * cg(p) *
                                ((1.0 + p.fidelity) * p.q_r * p.q_r +
                                 (1.0 - p.fidelity) * cg(p) * cg(p));
                     }});
        t.push_back({0b000, 0b000, "1/4 cos^2g ((1-F)qR^2+(1+F)cos^2g)",
                     [](const TableParams& p) {
                         return 0.25 * cg(p) * cg(p) *
                                ((1.0 - p.fidelity) * p.q_r * p.q_r +
                                 (1.0 + p.fidelity) * cg(p) * cg(p));
                     }});
        pair_terms(t, 0b000, 0b011, "-1/8(1-F) qL qR sin2g",
                   [](const TableParams& p) {
                       return -0.125 * (1.0 - p.fidelity) * p.q_l * p.q_r * s2g(p);
                   });
        pair_terms(t, 0b100, 0b111, "-1/8(1+F) qL qR sin2g",
                   [](const TableParams& p) {
                       return -0.125 * (1.0 + p.fidelity) * p.q_l * p.q_r * s2g(p);
                   });
        t.push_back({0b101, 0b101, "1/16(1-F) sin^2 2g",
                     [](const TableParams& p) {
                         return 0.0625 * (1.0 - p.fidelity) * s2g(p) * s2g(p);
                     }});
        t.push_back({0b001, 0b001, "1/16(1+F) sin^2 2g",
                     [](const TableParams& p) {
                         return 0.0625 * (1.0 + p.fidelity) * s2g(p) * s2g(p);
                     }});
        t.push_back({0b110, 0b110, "1/16(2(1+F)+2(1+F)(1-2qR^2)cos2g+(1-F)sin^2 2g)",
                     [](const TableParams& p) {
                         const double w = 1.0 + p.fidelity;
                         return 0.0625 * (2.0 * w +
                                          2.0 * w * (1.0 - 2.0 * p.q_r * p.q_r) * c2g(p) +
                                          (1.0 - p.fidelity) * s2g(p) * s2g(p));
                     }});
        t.push_back({0b010, 0b010, "1/16(2(1-F)+2(1-F)(1-2qR^2)cos2g+(1+F)sin^2 2g)",
                     [](const TableParams& p) {
                         const double w = 1.0 - p.fidelity;
                         return 0.0625 * (2.0 * w +
                                          2.0 * w * (1.0 - 2.0 * p.q_r * p.q_r) * c2g(p) +
                                          (1.0 + p.fidelity) * s2g(p) * s2g(p));
                     }});
        tables.push_back({Family::werner, Region::II, "werner/AB_II", false, std::move(t)});
    }

    return tables;
}

TableParams random_params(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    TableParams p{};
    p.alpha = unit(rng) * std::numbers::pi / 2.0;
    p.gamma = unit(rng) * std::numbers::pi / 4.0;
    p.q_r = unit(rng);
    p.q_l = std::sqrt(1.0 - p.q_r * p.q_r);
    p.fidelity = unit(rng);
    return p;
}

// Relabeling of the q_R <-> q_L symmetry partner: the two Bob labels swap for
// the phi-plus/phi-minus cross-family pairs, stay put for the phi-star pair.
int swap_bob_bits(int label3) {
    const int alice = (label3 >> 2) & 1;
    const int b1 = (label3 >> 1) & 1;
    const int b0 = label3 & 1;
    return (alice << 2) | (b0 << 1) | b1;
}

struct SymmetryPartner {
    const ClosedFormTable* partner;
    bool swap_labels;
};

std::optional<SymmetryPartner> symmetry_partner(const ClosedFormTable& table) {
    const auto& tables = printed_tables();
    auto find = [&tables](Family f, Region r) -> const ClosedFormTable* {
        for (const auto& t : tables)
            if (t.family == f && t.region == r) return &t;
        return nullptr;
    };
    switch (table.family) {
        case Family::phi_plus:
            return SymmetryPartner{
                find(Family::phi_minus, table.region == Region::I ? Region::II : Region::I), true};
        case Family::phi_minus:
            return SymmetryPartner{
                find(Family::phi_plus, table.region == Region::I ? Region::II : Region::I), true};
        case Family::phi_star:
            return SymmetryPartner{
                find(Family::phi_star, table.region == Region::I ? Region::II : Region::I), false};
        case Family::werner:
            return std::nullopt;
    }
    return std::nullopt;
}

DetectorConfig table_config(const ClosedFormTable& table) {
    return DetectorConfig{table.region, false, Species::particle};
}

std::string symbols_at(const ClosedFormTable& table, int bra, int ket) {
    std::string joined;
    for (const OracleTerm& term : table.terms) {
        if (term.bra != bra || term.ket != ket) continue;
        if (!joined.empty()) joined += " + ";
        joined += term.symbol;
    }
    return joined.empty() ? "(no printed term)" : joined;
}

}  // namespace

const std::vector<ClosedFormTable>& printed_tables() {
    static const std::vector<ClosedFormTable> tables = build_tables();
    return tables;
}

const ClosedFormTable& printed_table(Family family, Region region) {
    for (const ClosedFormTable& t : printed_tables())
        if (t.family == family && t.region == region) return t;
    throw std::invalid_argument("no printed table for this family/region");
}

ComplexMatrix assemble(const ClosedFormTable& table, const TableParams& params) {
    ComplexMatrix m(8);
    for (const OracleTerm& term : table.terms)
        m(static_cast<std::size_t>(term.bra), static_cast<std::size_t>(term.ket)) +=
            term.coeff(params);
    return m;
}

TableChecks run_table_checks(const ClosedFormTable& table) {
    TableChecks checks;

    {  // duplicated (bra, ket) labels
        std::set<std::pair<int, int>> seen;
        for (const OracleTerm& term : table.terms)
            if (!seen.insert({term.bra, term.ket}).second) {
                checks.labels_ok = false;
                checks.notes.push_back("duplicated label |" +
                                       basis_label(term.bra, table.alice_plus_minus) + "><" +
                                       basis_label(term.ket, table.alice_plus_minus) + "|");
            }
    }

    std::mt19937 rng(20260807);
    double worst_trace = 0.0, worst_herm = 0.0, worst_sym = 0.0;
    const auto partner = symmetry_partner(table);
    for (int draw = 0; draw < 50; ++draw) {
        const TableParams p = random_params(rng);
        const ComplexMatrix m = assemble(table, p);
        worst_trace = std::max(worst_trace, std::abs(m.trace() - cplx{1.0}));
        worst_herm = std::max(worst_herm, m.hermiticity_error());

        if (partner && partner->partner) {
            TableParams swapped = p;
            std::swap(swapped.q_r, swapped.q_l);
            const ComplexMatrix other = assemble(*partner->partner, swapped);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    const int oi = partner->swap_labels ? swap_bob_bits(i) : i;
                    const int oj = partner->swap_labels ? swap_bob_bits(j) : j;
                    worst_sym = std::max(
                        worst_sym, std::abs(m(static_cast<std::size_t>(i),
                                              static_cast<std::size_t>(j)) -
                                            other(static_cast<std::size_t>(oi),
                                                  static_cast<std::size_t>(oj))));
                }
        }
    }
    if (worst_trace > kOracleTolerance) {
        checks.trace_ok = false;
        std::ostringstream msg;
        msg << "trace deviates from 1 by up to " << worst_trace;
        checks.notes.push_back(msg.str());
    }
    if (worst_herm > 1e-12) {
        checks.hermitian_ok = false;
        checks.notes.push_back("assembled matrix is not Hermitian");
    }
    if (partner && partner->partner && worst_sym > kOracleTolerance) {
        checks.symmetry_ok = false;
        std::ostringstream msg;
        msg << "qR<->qL symmetry with " << partner->partner->name << " violated by up to "
            << worst_sym;
        checks.notes.push_back(msg.str());
    }
    return checks;
}

DiffReport diff_against_constructed(const ClosedFormTable& table, double alpha, double gamma,
                                    double q_r, double fidelity) {
    TableParams params{alpha, gamma, q_r, std::sqrt(std::max(0.0, 1.0 - q_r * q_r)), fidelity};
    const ComplexMatrix printed = assemble(table, params);

    const UnruhParams unruh(gamma, q_r);
    SharedStateSpec spec{table.family, alpha, std::nullopt};
    if (table.family == Family::werner) spec.fidelity = fidelity;
    const DensityMatrix constructed =
        reduce_for(table_config(table), build_shared_state(spec, unruh));

    DiffReport report;
    report.table = table.name;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const double dev = std::abs(printed(static_cast<std::size_t>(i),
                                                static_cast<std::size_t>(j)) -
                                        constructed.mat(static_cast<std::size_t>(i),
                                                        static_cast<std::size_t>(j)));
            report.max_abs_dev = std::max(report.max_abs_dev, dev);
            if (dev > kOracleTolerance) {
                DiffEntry entry;
                entry.bra = i;
                entry.ket = j;
                entry.symbol = symbols_at(table, i, j);
                entry.printed = printed(static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(j)).real();
                entry.constructed = constructed.mat(static_cast<std::size_t>(i),
                                                    static_cast<std::size_t>(j)).real();
                entry.worst_dev = dev;
                entry.at = params;
                report.entries.push_back(entry);
            }
        }
    return report;
}

DiffReport diff_over_grid(const ClosedFormTable& table) {
    DiffReport merged;
    merged.table = table.name;
    std::map<std::pair<int, int>, DiffEntry> worst;

    const std::vector<double> alphas{std::numbers::pi / 18.0, std::numbers::pi / 4.0, 1.2};
    const std::vector<double> q_rs{0.0, 0.25, 0.5, 0.73, 0.85, 1.0};
    const std::vector<double> fids =
        table.family == Family::werner ? std::vector<double>{0.3, 0.65, 0.95}
                                       : std::vector<double>{0.0};
    constexpr int kGammaPoints = 13;

    for (double alpha : alphas)
        for (double q_r : q_rs)
            for (double fid : fids)
                for (int g = 0; g < kGammaPoints; ++g) {
                    const double gamma = std::numbers::pi / 4.0 * g / (kGammaPoints - 1);
                    const DiffReport point =
                        diff_against_constructed(table, alpha, gamma, q_r, fid);
                    merged.max_abs_dev = std::max(merged.max_abs_dev, point.max_abs_dev);
                    for (const DiffEntry& e : point.entries) {
                        auto [it, inserted] = worst.try_emplace({e.bra, e.ket}, e);
                        if (!inserted && e.worst_dev > it->second.worst_dev) it->second = e;
                    }
                }

    for (auto& [key, entry] : worst) merged.entries.push_back(entry);
    return merged;
}

std::vector<TableReport> run_oracle() {
    std::vector<TableReport> reports;
    for (const ClosedFormTable& table : printed_tables()) {
        TableReport report;
        report.table = &table;
        report.checks = run_table_checks(table);
        report.diff = diff_over_grid(table);
        reports.push_back(std::move(report));
    }
    return reports;
}

std::string basis_label(int label3, bool alice_plus_minus) {
    std::string s;
    const int alice = (label3 >> 2) & 1;
    if (alice_plus_minus)
        s += alice ? '-' : '+';
    else
        s += alice ? '1' : '0';
    s += ((label3 >> 1) & 1) ? '1' : '0';
    s += (label3 & 1) ? '1' : '0';
    return s;
}

void write_oracle_report_text(std::ostream& os, const std::vector<TableReport>& reports) {
    os << "Printed-table cross-check (constructed matrices are ground truth)\n";
    os << "------------------------------------------------------------------\n";
    for (const TableReport& r : reports) {
        os << r.table->name << ": ";
        if (!r.flagged() && r.diff.empty()) {
            os << "MATCHED (max deviation " << r.diff.max_abs_dev << ")\n";
            continue;
        }
        os << (r.flagged() ? "FLAGGED" : "MISMATCH (no printed-table check caught it)") << "\n";
        for (const std::string& note : r.checks.notes) os << "    check: " << note << "\n";
        for (const DiffEntry& e : r.diff.entries) {
            os << "    |" << basis_label(e.bra, r.table->alice_plus_minus) << "><"
               << basis_label(e.ket, r.table->alice_plus_minus) << "|  printed {" << e.symbol
               << "} = " << e.printed << ", constructed " << e.constructed << " (dev "
               << e.worst_dev << " at alpha=" << e.at.alpha << " gamma=" << e.at.gamma
               << " qR=" << e.at.q_r << (r.table->family == Family::werner
                                             ? " F=" + std::to_string(e.at.fidelity)
                                             : std::string{})
               << ")\n";
        }
    }
}

void write_oracle_report_json(std::ostream& os, const std::vector<TableReport>& reports) {
    nlohmann::json root = nlohmann::json::array();
    for (const TableReport& r : reports) {
        nlohmann::json jt;
        jt["table"] = r.table->name;
        jt["flagged"] = r.flagged();
        jt["checks"] = {{"trace", r.checks.trace_ok},
                        {"labels", r.checks.labels_ok},
                        {"hermitian", r.checks.hermitian_ok},
                        {"symmetry", r.checks.symmetry_ok}};
        jt["notes"] = r.checks.notes;
        jt["max_abs_dev"] = r.diff.max_abs_dev;
        nlohmann::json entries = nlohmann::json::array();
        for (const DiffEntry& e : r.diff.entries) {
            entries.push_back({{"bra", basis_label(e.bra, r.table->alice_plus_minus)},
                               {"ket", basis_label(e.ket, r.table->alice_plus_minus)},
                               {"symbolic", e.symbol},
                               {"printed", e.printed},
                               {"constructed", e.constructed},
                               {"deviation", e.worst_dev},
                               {"alpha", e.at.alpha},
                               {"gamma", e.at.gamma},
                               {"qR", e.at.q_r},
                               {"F", e.at.fidelity}});
        }
        jt["entries"] = entries;
        root.push_back(jt);
    }
    os << root.dump(2) << "\n";
}

}  // namespace unruhsim
