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

#include "anyonic/hopf.hpp"

#include <sstream>

#include "anyonic/linalg.hpp"

namespace anyonic {

namespace {

std::string column_string(const GradedMap& f, int c) {
    std::ostringstream out;
    out << "(";
    auto col = f.dense_column(c);
    for (size_t i = 0; i < col.size(); ++i) {
        if (i) out << ", ";
        out << col[i].str();
    }
    out << ")";
    return out.str();
}

GradedMap id_power(const GradedSpace& h, int k) {
    return GradedMap::identity(tensor_power(h, k));
}

}  // namespace

void check_equal(Report& report, const std::string& name, const GradedMap& lhs, const GradedMap& rhs) {
    if (lhs == rhs) {
        report.add(name, true);
        return;
    }
    std::string witness = "shape mismatch";
    if (lhs.source() == rhs.source() && lhs.target() == rhs.target()) {
        for (int c = 0; c < lhs.source().total_dim(); ++c) {
            if (lhs.dense_column(c) != rhs.dense_column(c)) {
                witness = "basis column " + std::to_string(c) + ": lhs " + column_string(lhs, c) +
                          " vs rhs " + column_string(rhs, c);
                break;
            }
        }
    }
    report.add(name, false, witness);
}

bool operator==(const BraidedHopfAlgebra& a, const BraidedHopfAlgebra& b) {
    return a.space == b.space && a.mul == b.mul && a.unit == b.unit && a.comul == b.comul &&
           a.counit == b.counit && a.antipode == b.antipode && a.braid == b.braid;
}

ModularPair trivial_pair(const BraidedHopfAlgebra& h) { return {h.counit, h.unit}; }

Report verify_hopf_axioms(const BraidedHopfAlgebra& h) {
    Report report;
    const GradedSpace& H = h.space;
    GradedMap id_h = GradedMap::identity(H);
    GradedMap id_i = GradedMap::identity(h.unit_object());
    GradedMap psi = braiding(H, H, h.braid);

    check_equal(report, "associativity", compose(h.mul, tensor_map(h.mul, id_h)),
                compose(h.mul, tensor_map(id_h, h.mul)));
    check_equal(report, "unit_left", compose(h.mul, tensor_map(h.unit, id_h)), id_h);
    check_equal(report, "unit_right", compose(h.mul, tensor_map(id_h, h.unit)), id_h);
    check_equal(report, "coassociativity", compose(tensor_map(h.comul, id_h), h.comul),
                compose(tensor_map(id_h, h.comul), h.comul));
    check_equal(report, "counit_left", compose(tensor_map(h.counit, id_h), h.comul), id_h);
    check_equal(report, "counit_right", compose(tensor_map(id_h, h.counit), h.comul), id_h);
    check_equal(report, "counit_unit", compose(h.counit, h.unit), id_i);
    check_equal(report, "bialgebra_comul_mul", compose(h.comul, h.mul),
                compose(tensor_map(h.mul, h.mul),
                        compose(tensor_many({id_h, psi, id_h}), tensor_map(h.comul, h.comul))));
    check_equal(report, "bialgebra_comul_unit", compose(h.comul, h.unit),
                tensor_map(h.unit, h.unit));
    check_equal(report, "bialgebra_counit_mul", compose(h.counit, h.mul),
                tensor_map(h.counit, h.counit));
    GradedMap eta_eps = compose(h.unit, h.counit);
    check_equal(report, "antipode_left",
                compose(h.mul, compose(tensor_map(h.antipode, id_h), h.comul)), eta_eps);
    check_equal(report, "antipode_right",
                compose(h.mul, compose(tensor_map(id_h, h.antipode), h.comul)), eta_eps);
    return report;
}

Report verify_modular_pair(const BraidedHopfAlgebra& h, const ModularPair& pair) {
    Report report;
    GradedMap id_i = GradedMap::identity(h.unit_object());
    check_equal(report, "character_mul", compose(pair.character, h.mul),
                tensor_map(pair.character, pair.character));
    check_equal(report, "character_unit", compose(pair.character, h.unit), id_i);
    check_equal(report, "grouplike_comul", compose(h.comul, pair.grouplike),
                tensor_map(pair.grouplike, pair.grouplike));
    check_equal(report, "grouplike_counit", compose(h.counit, pair.grouplike), id_i);
    return report;
}

GradedMap twisted_antipode(const BraidedHopfAlgebra& h, const ModularPair& pair) {
    // (delta (x) S) o Delta; the character lands in the unit object, so the
    // target I (x) H is H on the nose.
    return compose(tensor_map(pair.character, h.antipode), h.comul);
}

GradedMap iterated_coproduct(const BraidedHopfAlgebra& h, int k) {
    if (k < 0) fail(Errc::invalid_argument, "negative coproduct iteration");
    GradedMap acc = GradedMap::identity(h.space);
    for (int step = 1; step <= k; ++step)
        acc = compose(tensor_map(h.comul, id_power(h.space, step - 1)), acc);
    return acc;
}

GradedMap braided_shuffle(const GradedSpace& h, int n, BraidKind kind) {
    if (n < 1) fail(Errc::invalid_argument, "braided shuffle needs n >= 1");
    GradedMap acc = GradedMap::identity(tensor_power(h, 2 * n));
    GradedMap psi = braiding(h, h, kind);
    for (int j = n - 1; j >= 1; --j) {
        std::vector<GradedMap> parts;
        GradedMap border = id_power(h, j);
        parts.push_back(border);
        for (int k = 0; k < n - j; ++k) parts.push_back(psi);
        parts.push_back(border);
        // factor j = n-1 acts first, j = 1 acts last
        acc = compose(tensor_many(parts), acc);
    }
    return acc;
}

GradedMap power_multiplication(const BraidedHopfAlgebra& h, int n) {
    if (n < 1) fail(Errc::invalid_argument, "power multiplication needs n >= 1");
    if (n == 1) return h.mul;
    std::vector<GradedMap> muls(n, h.mul);
    return compose(tensor_many(muls), braided_shuffle(h.space, n, h.braid));
}

int antipode_involution_defect(const BraidedHopfAlgebra& h, const ModularPair& pair) {
    GradedMap twisted = twisted_antipode(h, pair);
    GradedMap squared = compose(twisted, twisted);
    GradedMap sigma_inv = compose(h.antipode, pair.grouplike);
    // Ad_sigma: H = I (x) H (x) I -> H^3 -> H
    GradedMap embed = tensor_many({pair.grouplike, GradedMap::identity(h.space), sigma_inv});
    GradedMap ad = compose(h.mul, compose(tensor_map(h.mul, GradedMap::identity(h.space)), embed));
    return rank(squared - ad);
}

}  // namespace anyonic
