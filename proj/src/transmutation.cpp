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

#include "anyonic/transmutation.hpp"

namespace anyonic {

namespace {

GradedMap basis_element(const GradedSpace& h, int slot) {
    return GradedMap::from_triplets(GradedSpace::unit(h.field()), h,
                                    {{slot, 0, CyclotomicScalar::one(h.field())}});
}

/// x * y in the algebra (V, mul_v); elements are columns I -> V.
GradedMap element_product(const GradedMap& mul_v, const GradedMap& x, const GradedMap& y) {
    return compose(mul_v, tensor_map(x, y));
}

}  // namespace

OrdinaryHopf czn_group_algebra(int n) {
    if (n < 1) fail(Errc::invalid_argument, "group algebra needs n >= 1");
    FieldPtr field = CyclotomicField::get(n);
    std::vector<int> dims(n, 0);
    dims[0] = n;  // conjugation in an abelian group is trivial: all of H sits in degree zero
    GradedSpace H(field, dims);
    GradedSpace HH = tensor_space(H, H);
    GradedSpace I = GradedSpace::unit(field);
    CyclotomicScalar one = CyclotomicScalar::one(field);

    std::vector<std::tuple<int, int, CyclotomicScalar>> mul_entries;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul_entries.emplace_back((a + b) % n, a * n + b, one);
    std::vector<std::tuple<int, int, CyclotomicScalar>> comul_entries;
    std::vector<std::tuple<int, int, CyclotomicScalar>> counit_entries;
    std::vector<std::tuple<int, int, CyclotomicScalar>> antipode_entries;
    for (int a = 0; a < n; ++a) {
        comul_entries.emplace_back(a * n + a, a, one);
        counit_entries.emplace_back(0, a, one);
        antipode_entries.emplace_back((n - a) % n, a, one);
    }

    return OrdinaryHopf{
        H,
        GradedMap::from_triplets(HH, H, mul_entries),
        GradedMap::from_triplets(I, H, {{0, 0, one}}),
        GradedMap::from_triplets(H, HH, comul_entries),
        GradedMap::from_triplets(H, I, counit_entries),
        GradedMap::from_triplets(H, H, antipode_entries),
        BraidKind::flip,
    };
}

QuasitriangularElement czn_r_matrix(int n) {
    if (n < 1) fail(Errc::invalid_argument, "r-matrix needs n >= 1");
    FieldPtr field = CyclotomicField::get(n);
    OrdinaryHopf h = czn_group_algebra(n);
    GradedSpace HH = tensor_space(h.space, h.space);
    Rational inv_n = rat(1, n);
    std::vector<std::tuple<int, int, CyclotomicScalar>> entries;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CyclotomicScalar coeff =
                CyclotomicScalar::zeta_power(field, -static_cast<long>(a) * b) * inv_n;
            entries.emplace_back(a * n + b, 0, std::move(coeff));
        }
    return {GradedMap::from_triplets(GradedSpace::unit(field), HH, entries)};
}

Report verify_quasitriangular(const OrdinaryHopf& h, const QuasitriangularElement& r) {
    if (!(r.element.target() == tensor_space(h.space, h.space)))
        fail(Errc::shape_mismatch, "r-matrix does not live in H (x) H");
    Report report;
    const GradedSpace& H = h.space;
    GradedMap id_h = GradedMap::identity(H);
    GradedMap flip = flip_map(H, H);
    GradedMap mul2 = power_multiplication(h, 2);
    GradedMap mul3 = power_multiplication(h, 3);

    GradedMap r12 = tensor_map(r.element, h.unit);
    GradedMap r23 = tensor_map(h.unit, r.element);
    GradedMap r13 = compose(tensor_many({id_h, flip}), tensor_map(r.element, h.unit));

    check_equal(report, "coproduct_left", compose(tensor_map(h.comul, id_h), r.element),
                element_product(mul3, r13, r23));
    check_equal(report, "coproduct_right", compose(tensor_map(id_h, h.comul), r.element),
                element_product(mul3, r13, r12));
    // R Delta(h) = Delta_op(h) R as maps H -> H (x) H
    check_equal(report, "intertwines_coproduct", compose(mul2, tensor_map(r.element, h.comul)),
                compose(mul2, tensor_map(compose(flip, h.comul), r.element)));

    GradedSpace HH = tensor_space(H, H);
    GradedMap left_mult_r = compose(mul2, tensor_map(r.element, GradedMap::identity(HH)));
    bool invertible = rank(left_mult_r) == HH.total_dim();
    report.add("invertible", invertible, invertible ? "" : "left multiplication by R is singular");
    return report;
}

GradedMap conjugation_action(const OrdinaryHopf& h) {
    const GradedSpace& H = h.space;
    GradedMap id_h = GradedMap::identity(H);
    // a (x) x |-> a^(1) (x) a^(2) (x) x |-> a^(1) (x) x (x) S(a^(2)) |-> a^(1) x S(a^(2))
    GradedMap spread = tensor_map(h.comul, id_h);
    GradedMap swap_tail = tensor_map(id_h, compose(tensor_map(id_h, h.antipode), flip_map(H, H)));
    return compose(h.mul, compose(tensor_map(h.mul, id_h), compose(swap_tail, spread)));
}

GradedMap regular_action(const OrdinaryHopf& h) { return h.mul; }

GradedMap trivial_action(const OrdinaryHopf& h, const GradedSpace& v) {
    return tensor_map(h.counit, GradedMap::identity(v));
}

GradingResult grading_from_action(const OrdinaryHopf& h, const GradedSpace& v,
                                  const GradedMap& action) {
    const FieldPtr& field = h.field();
    int n = field->order();
    GradedMap id_v = GradedMap::identity(v);

    // a bad action would silently produce a bogus grading
    if (!(compose(action, tensor_map(h.mul, id_v)) ==
          compose(action, tensor_map(GradedMap::identity(h.space), action))))
        fail(Errc::precondition, "not a module: action incompatible with multiplication");
    if (!(compose(action, tensor_map(h.unit, id_v)) == id_v))
        fail(Errc::precondition, "not a module: unit does not act as identity");

    GradedMap generator = basis_element(h.space, h.dim() > 1 ? 1 : 0);
    GradedMap g_action = compose(action, tensor_map(generator, id_v));

    std::vector<int> degrees;
    std::vector<std::vector<CyclotomicScalar>> columns;
    for (int k = 0; k < n; ++k) {
        CyclotomicScalar eigen = CyclotomicScalar::zeta_power(field, k);
        KernelResult ker = kernel(g_action - scalar_multiple(eigen, id_v));
        for (int c = 0; c < ker.space.total_dim(); ++c) {
            degrees.push_back(k);
            columns.push_back(ker.inclusion.dense_column(c));
        }
    }
    if (static_cast<int>(columns.size()) != v.total_dim())
        fail(Errc::precondition,
             "module is not anyonic: generator action is not diagonalizable over root-of-unity "
             "eigenvalues");

    GradedSpace graded = GradedSpace::from_slot_degrees(field, degrees);
    std::vector<std::tuple<int, int, CyclotomicScalar>> entries;
    for (size_t c = 0; c < columns.size(); ++c)
        for (size_t r = 0; r < columns[c].size(); ++r)
            if (!columns[c][r].is_zero())
                entries.emplace_back(static_cast<int>(r), static_cast<int>(c), columns[c][r]);
    // the eigenbasis change is linear but not degree-preserving
    return {graded, GradedMap::from_triplets_any(graded, v, entries)};
}

BraidedHopfAlgebra transmute(const OrdinaryHopf& h, const QuasitriangularElement& r) {
    Report qt = verify_quasitriangular(h, r);
    for (const auto& c : qt.checks)
        if (!c.pass) fail(Errc::precondition, "quasitriangular axiom failed: " + c.name);

    const GradedSpace& H = h.space;
    GradedMap id_h = GradedMap::identity(H);
    GradedMap flip = flip_map(H, H);
    GradedMap act = conjugation_action(h);

    // coproduct: h |-> h^(1) S(R_2) (x) R_1 > h^(2)
    GradedMap insert_r = tensor_many({id_h, r.element, id_h});  // H (x) I (x) H on the nose
    GradedMap mid_flip = tensor_many({id_h, flip, id_h});
    GradedMap finish = tensor_map(compose(h.mul, tensor_map(id_h, h.antipode)), act);
    GradedMap comul_t = compose(finish, compose(mid_flip, compose(insert_r, h.comul)));

    // antipode: h |-> R_2 S(R_1 > h)
    GradedMap with_r = tensor_map(r.element, id_h);  // H = I (x) H -> H (x) H (x) H
    GradedMap swap_heads = tensor_map(flip, id_h);
    GradedMap act_then_s = tensor_map(id_h, compose(h.antipode, act));
    GradedMap antipode_t = compose(h.mul, compose(act_then_s, compose(swap_heads, with_r)));

    GradingResult grading = grading_from_action(h, H, act);
    const GradedMap& p = grading.to_original;
    GradedMap p_inv = solve_through(p, id_h);
    GradedMap p2 = tensor_map(p, p);
    GradedMap p2_inv = tensor_map(p_inv, p_inv);

    BraidedHopfAlgebra out{
        grading.graded,
        compose(p_inv, compose(h.mul, p2)),
        compose(p_inv, h.unit),
        compose(p2_inv, compose(comul_t, p)),
        compose(h.counit, p),
        compose(p_inv, compose(antipode_t, p)),
        BraidKind::anyonic,
    };
    require_degree_preserving(out.mul, "transmuted multiplication");
    require_degree_preserving(out.unit, "transmuted unit");
    require_degree_preserving(out.comul, "transmuted coproduct");
    require_degree_preserving(out.counit, "transmuted counit");
    require_degree_preserving(out.antipode, "transmuted antipode");
    return out;
}

GradedMap braiding_from_r(const OrdinaryHopf& h, const QuasitriangularElement& r,
                          const GradedSpace& v, const GradedMap& action_v,
                          const GradedSpace& w, const GradedMap& action_w) {
    if (r.element.column(0).empty()) fail(Errc::invalid_argument, "zero r-matrix");
    int dim_h = h.dim();
    GradedMap flip = flip_map(v, w);
    GradedMap sum(tensor_space(w, v), tensor_space(w, v));
    bool first = true;
    for (const auto& entry : r.element.column(0)) {
        int a = entry.row / dim_h;
        int b = entry.row % dim_h;
        GradedMap act_a = compose(action_v, tensor_map(basis_element(h.space, a), GradedMap::identity(v)));
        GradedMap act_b = compose(action_w, tensor_map(basis_element(h.space, b), GradedMap::identity(w)));
        GradedMap term = scalar_multiple(entry.value, tensor_map(act_b, act_a));
        sum = first ? term : sum + term;
        first = false;
    }
    return compose(sum, flip);
}

}  // namespace anyonic
