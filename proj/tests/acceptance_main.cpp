/*
   Copyright 2026 The anyonic project

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance suite: one line per criterion, all checks exact.

#include <chrono>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "anyonic.h"
#include "anyonic/cohomology.hpp"
#include "anyonic/pipeline.hpp"
#include "anyonic/serialization.hpp"
#include "anyonic/transmutation.hpp"
#include "oracles.hpp"

using namespace anyonic;

namespace {

int failures = 0;

void conclude(int number, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << label;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. pipeline runs for n = 2, 3 at level 4 give HC = (1, 0, 1, 0), each under 60 s
void criterion_hc_pattern() {
    bool pass = true;
    std::ostringstream detail;
    for (int n : {2, 3}) {
        auto start = std::chrono::steady_clock::now();
        char* report_text = nullptr;
        int all_pass = 0;
        any_status status = any_pipeline(n, 4, 1000000, &report_text, &all_pass);
        double elapsed = seconds_since(start);
        if (status != ANY_OK || all_pass != 1) {
            pass = false;
            detail << "pipeline n=" << n << " did not pass; ";
            any_string_free(report_text);
            continue;
        }
        nlohmann::json report = nlohmann::json::parse(report_text);
        any_string_free(report_text);
        const auto& rows = report.at("cohomology").at("rows");
        const int expected[] = {1, 0, 1, 0};
        if (rows.size() != 4) {
            pass = false;
            detail << "pipeline n=" << n << " returned " << rows.size() << " degrees; ";
            continue;
        }
        for (int d = 0; d <= 3; ++d)
            if (rows[d].at("hc").get<int>() != expected[d]) {
                pass = false;
                detail << "n=" << n << " HC^" << d << " = " << rows[d].at("hc").get<int>()
                       << " expected " << expected[d] << "; ";
            }
        if (elapsed >= 60.0) {
            pass = false;
            detail << "n=" << n << " took " << elapsed << " s; ";
        }
    }
    conclude(1, "pipeline HC pattern (1,0,1,0) for n=2,3 at level 4 within 60 s each", pass,
             detail.str());
}

// 2. transmutation of the cyclic family is trivial for n = 2..6, under 5 s total
void criterion_transmutation_trivial() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream detail;
    for (int n = 2; n <= 6; ++n) {
        OrdinaryHopf h = czn_group_algebra(n);
        BraidedHopfAlgebra hb = transmute(h, czn_r_matrix(n));
        GradedMap psi = braiding(hb.space, hb.space, hb.braid);
        bool ok = hb.comul == h.comul && hb.antipode == h.antipode &&
                  psi == flip_map(hb.space, hb.space) &&
                  compose(psi, psi) == GradedMap::identity(tensor_space(hb.space, hb.space));
        if (!ok) {
            pass = false;
            detail << "n=" << n << " transmutation not trivial; ";
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 5.0) {
        pass = false;
        detail << "took " << elapsed << " s; ";
    }
    conclude(2, "transmutation triviality for n=2..6 within 5 s", pass, detail.str());
}

// 3. the builtin r-matrix satisfies all quasitriangular axioms for n <= 6
void criterion_quasitriangular() {
    bool pass = true;
    std::ostringstream detail;
    for (int n = 1; n <= 6; ++n) {
        Report report = verify_quasitriangular(czn_group_algebra(n), czn_r_matrix(n));
        if (!report.all_pass()) {
            pass = false;
            detail << "n=" << n << " failed; ";
        }
    }
    conclude(3, "quasitriangular axioms plus invertibility for n<=6", pass, detail.str());
}

// 4. the cocyclic identity suite holds to level 4 for n = 2, 3 with the trivial pair
void criterion_cocyclic_suite() {
    bool pass = true;
    std::ostringstream detail;
    for (int n : {2, 3}) {
        OrdinaryHopf h = czn_group_algebra(n);
        CocyclicModule cm = build_cm_cocyclic(h, trivial_pair(h), 4);
        Report report = verify_cocyclic_identities(cm);
        if (!report.all_pass()) {
            pass = false;
            for (const auto& c : report.checks)
                if (!c.pass) {
                    detail << "n=" << n << " " << c.name << "; ";
                    break;
                }
        }
        for (int k = 0; k <= 4; ++k)
            if (para_defect(cm, k) != 0) {
                pass = false;
                detail << "n=" << n << " defect at level " << k << "; ";
            }
    }
    conclude(4, "cocyclic identity suite to level 4 for n=2,3 with zero para-defect", pass,
             detail.str());
}

// 5. balanced quotients of the unit-coefficient triple reduce to the Hopf picture
void criterion_triple_reduction() {
    bool pass = true;
    std::ostringstream detail;
    for (int n : {2, 3}) {
        OrdinaryHopf h = czn_group_algebra(n);
        TripleCocyclic result = build_triple_quotient(reduction_triple(h), 3);
        for (int k = 0; k <= 3; ++k) {
            int expected = static_cast<int>(std::lround(std::pow(n, k)));
            if (result.quotients[k].quotient.space.total_dim() != expected) {
                pass = false;
                detail << "n=" << n << " quotient dim at level " << k << " is "
                       << result.quotients[k].quotient.space.total_dim() << " expected " << expected
                       << "; ";
            }
        }
        if (!result.induction_checks.all_pass()) {
            pass = false;
            detail << "n=" << n << " some induction ill-defined; ";
        }
        if (!verify_cocyclic_identities(result.induced).all_pass()) {
            pass = false;
            detail << "n=" << n << " induced suite failed; ";
        }
    }
    conclude(5, "balanced quotient dims n^k, well-defined inductions, induced suite to level 3",
             pass, detail.str());
}

// 6. support criteria agree with exact matrix checks on the three named cases
void criterion_braid_support() {
    bool pass = true;
    std::ostringstream detail;
    struct Case {
        int n;
        std::vector<int> support;
        bool expect_symmetric;
        bool expect_flip;
    };
    const Case cases[] = {
        {18, {0, 3, 6, 9, 12, 15}, true, false},
        {9, {0, 3, 6}, true, true},
        {5, {1}, false, false},
    };
    for (const auto& c : cases) {
        SymmetryCheck predicted = support_criterion(c.n, c.support, c.support);
        FieldPtr field = CyclotomicField::get(c.n);
        std::vector<int> dims(c.n, 0);
        for (int d : c.support) dims[d] = 1;
        GradedSpace space(field, dims);
        SymmetryCheck exact = braid_symmetry_check(space, space);
        if (predicted.symmetric_pair != c.expect_symmetric || predicted.flip != c.expect_flip) {
            pass = false;
            detail << "criterion wrong for n=" << c.n << "; ";
        }
        if (exact.symmetric_pair != predicted.symmetric_pair || exact.flip != predicted.flip) {
            pass = false;
            detail << "matrix check disagrees for n=" << c.n << "; ";
        }
    }
    conclude(6, "support criteria for n=18, 9, 5 agree with exact matrix checks", pass,
             detail.str());
}

// 7. property suites: differentials square to zero, braiding naturality and
// hexagon, shuffle versus the interleaving oracle, field axioms and root sums
void criterion_property_suites() {
    bool pass = true;
    std::ostringstream detail;

    for (int n : {2, 3}) {
        OrdinaryHopf h = czn_group_algebra(n);
        CocyclicModule cm = build_cm_cocyclic(h, trivial_pair(h), 4);
        for (int k = 1; k + 1 <= 4; ++k) {
            GradedMap b_low = hochschild_differential(cm, k);
            GradedMap b_high = hochschild_differential(cm, k + 1);
            if (!compose(b_high, b_low).is_zero()) {
                pass = false;
                detail << "b^2 != 0 for n=" << n << " at level " << k << "; ";
            }
        }
    }

    oracles::Rng rng(987654);
    for (int n : {3, 5}) {
        FieldPtr field = CyclotomicField::get(n);
        for (int trial = 0; trial < 4; ++trial) {
            GradedSpace v = rng.space(field), w = rng.space(field);
            GradedSpace v2 = rng.space(field), w2 = rng.space(field);
            GradedMap f = rng.graded_map(v, v2);
            GradedMap g = rng.graded_map(w, w2);
            if (!(compose(braiding(v2, w2), tensor_map(f, g)) ==
                  compose(tensor_map(g, f), braiding(v, w)))) {
                pass = false;
                detail << "naturality failed for n=" << n << "; ";
            }
            GradedSpace u = rng.space(field);
            if (!(braiding(tensor_space(u, v), w) ==
                  compose(tensor_map(braiding(u, w), GradedMap::identity(v)),
                          tensor_map(GradedMap::identity(u), braiding(v, w))))) {
                pass = false;
                detail << "hexagon failed for n=" << n << "; ";
            }
        }
    }

    FieldPtr f3 = CyclotomicField::get(3);
    GradedSpace graded(f3, {1, 1, 1});
    for (int k = 1; k <= 3; ++k)
        if (!(braided_shuffle(graded, k) == oracles::interleave_with_phases(graded, k))) {
            pass = false;
            detail << "shuffle oracle mismatch at k=" << k << "; ";
        }

    for (int n = 1; n <= 8; ++n) {
        FieldPtr field = CyclotomicField::get(n);
        CyclotomicScalar zeta = CyclotomicScalar::zeta_power(field, 1);
        CyclotomicScalar power = CyclotomicScalar::one(field);
        for (int k = 0; k < n; ++k) power *= zeta;
        if (!power.is_one()) {
            pass = false;
            detail << "zeta^n != 1 for n=" << n << "; ";
        }
        for (int b = 0; b < n; ++b) {
            CyclotomicScalar sum = root_sum_check(field, b);
            bool expected = b == 0 ? sum.is_one() : sum.is_zero();
            if (!expected) {
                pass = false;
                detail << "root sum wrong for n=" << n << " b=" << b << "; ";
            }
        }
        oracles::Rng srng(n);
        auto sample = [&] {
            std::vector<Rational> coeffs;
            for (int i = 0; i < field->degree(); ++i) coeffs.push_back(srng.rational());
            return CyclotomicScalar::from_coeffs(field, coeffs);
        };
        for (int trial = 0; trial < 8; ++trial) {
            CyclotomicScalar a = sample(), b = sample(), c = sample();
            bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                      a * (b + c) == a * b + a * c;
            if (!a.is_zero()) ok = ok && a * a.inverse() == CyclotomicScalar::one(field);
            if (!ok) {
                pass = false;
                detail << "field axiom failed for n=" << n << "; ";
            }
        }
    }

    conclude(7, "property suites: b^2 = 0, naturality, hexagon, shuffle oracle, field axioms",
             pass, detail.str());
}

}  // namespace

int main() {
    criterion_hc_pattern();
    criterion_transmutation_trivial();
    criterion_quasitriangular();
    criterion_cocyclic_suite();
    criterion_triple_reduction();
    criterion_braid_support();
    criterion_property_suites();
    if (failures == 0)
        std::cout << "acceptance: all 7 criteria passed" << std::endl;
    else
        std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return failures;
}
