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

#include <doctest.h>

#include "anyonic/cohomology.hpp"
#include "anyonic/transmutation.hpp"
#include "oracles.hpp"

using namespace anyonic;

namespace {

CocyclicModule group_module(int n, int level) {
    OrdinaryHopf h = czn_group_algebra(n);
    return build_cm_cocyclic(h, trivial_pair(h), level);
}

}  // namespace

TEST_CASE("the first differential of a group algebra vanishes") {
    CocyclicModule cm = group_module(4, 2);
    CHECK(hochschild_differential(cm, 1).is_zero());  // both faces are the unit
}

TEST_CASE("second differential expands to the three-face alternating sum") {
    CocyclicModule cm = group_module(2, 2);
    GradedMap b2 = hochschild_differential(cm, 2);
    FieldPtr field = cm.levels[0].field();
    CyclotomicScalar one = CyclotomicScalar::one(field);
    // b2(g^a) = 1 (x) g^a - g^a (x) g^a + g^a (x) 1
    for (int a = 0; a < 2; ++a) {
        auto col = b2.dense_column(a);
        for (int r = 0; r < 4; ++r) {
            CyclotomicScalar expected = CyclotomicScalar::zero(field);
            if (r == 0 * 2 + a) expected += one;
            if (r == a * 2 + a) expected -= one;
            if (r == a * 2 + 0) expected += one;
            CHECK(col[r] == expected);
        }
    }
}

TEST_CASE("differentials square to zero at all computable levels") {
    for (int n : {2, 3}) {
        CocyclicModule cm = group_module(n, 4);
        CochainComplex full = hochschild_complex(cm);
        for (int k = 1; k + 1 <= cm.level(); ++k)
            CHECK(compose(full.differentials[k + 1], full.differentials[k]).is_zero());
        CochainComplex lambda = lambda_complex(cm);
        for (int k = 1; k + 1 <= cm.level(); ++k)
            CHECK(compose(lambda.differentials[k + 1], lambda.differentials[k]).is_zero());
    }
}

TEST_CASE("lambda-fixed subspaces") {
    CocyclicModule cm2 = group_module(2, 2);
    CHECK(cyclic_subcomplex(cm2, 0).space.total_dim() == 1);  // all of C^0
    CHECK(cyclic_subcomplex(cm2, 1).space.total_dim() == 0);  // id + tau_1 = 2 id

    CocyclicModule cm3 = group_module(3, 2);
    SubcomplexLevel level1 = cyclic_subcomplex(cm3, 1);
    CHECK(level1.space.total_dim() == 1);
    // frozen kernel vector of id + tau_1 with the fixed pivot rule: g - g^2 up to sign
    auto basis = level1.inclusion.dense_column(0);
    FieldPtr field = cm3.levels[0].field();
    CHECK(basis[0].is_zero());
    CHECK(basis[1] == -CyclotomicScalar::one(field));
    CHECK(basis[2] == CyclotomicScalar::one(field));
}

TEST_CASE("cyclic cohomology of group algebras alternates") {
    for (int n : {2, 3}) {
        CocyclicModule cm = group_module(n, 4);
        CohomologyReport report = hc_dimensions(cm, 3);
        REQUIRE(report.rows.size() == 4);
        CHECK(report.rows[0].hc == 1);
        CHECK(report.rows[1].hc == 0);
        CHECK(report.rows[2].hc == 1);
        CHECK(report.rows[3].hc == 0);
        CHECK(report.rows[0].hh == 1);
        CHECK(report.rows[1].hh == 0);
        CHECK(report.rows[0].dim_full == 1);
        CHECK(report.rows[0].dim_lambda == 1);
    }
}

TEST_CASE("the super line has one-dimensional degree-zero cyclic cohomology") {
    FieldPtr f2 = CyclotomicField::get(2);
    GradedSpace H(f2, {1, 1});
    GradedSpace HH = tensor_space(H, H);
    GradedSpace I = GradedSpace::unit(f2);
    CyclotomicScalar one = CyclotomicScalar::one(f2);
    BraidedHopfAlgebra h{
        H,
        GradedMap::from_triplets(HH, H, {{0, 0, one}, {1, 1, one}, {1, 2, one}}),
        GradedMap::from_triplets(I, H, {{0, 0, one}}),
        GradedMap::from_triplets(H, HH, {{0, 0, one}, {1, 1, one}, {2, 1, one}}),
        GradedMap::from_triplets(H, I, {{0, 0, one}}),
        GradedMap::from_triplets(H, H, {{0, 0, one}, {1, 1, -one}}),
        BraidKind::anyonic,
    };
    REQUIRE(verify_hopf_axioms(h).all_pass());
    CocyclicModule cm = build_cm_cocyclic(h, trivial_pair(h), 3);
    REQUIRE(verify_cocyclic_identities(cm).all_pass());
    CohomologyReport report = hc_dimensions(cm, 2);
    // both faces at level 1 insert the unit, so b_1 = 0 and HC^0 = dim C^0
    CHECK(report.rows[0].hc == 1);
    CHECK(report.rows[0].hh == 1);
}

TEST_CASE("degree bound errors are explicit") {
    CocyclicModule cm = group_module(2, 2);
    CHECK_NOTHROW(hc_dimensions(cm, 1));
    CHECK_THROWS_AS(hc_dimensions(cm, 2), Error);
    CHECK_THROWS_AS(cyclic_subcomplex(cm, 5), Error);
}

TEST_CASE("para-cocyclic data is refused") {
    OrdinaryHopf h = czn_group_algebra(3);
    GradedMap g_element = GradedMap::from_triplets(h.unit_object(), h.space,
                                                   {{1, 0, CyclotomicScalar::one(h.field())}});
    ModularPair broken{h.counit, h.unit + g_element};
    BuildOptions force;
    force.enforce_valid = false;
    CocyclicModule cm = build_cm_cocyclic(h, broken, 2, force);
    CHECK_THROWS_AS(cyclic_subcomplex(cm, 1), Error);
    CHECK_THROWS_AS(hc_dimensions(cm, 1), Error);
}

TEST_CASE("cohomology dimensions are basis independent") {
    oracles::Rng rng(2026);
    OrdinaryHopf h = czn_group_algebra(3);
    CocyclicModule cm = build_cm_cocyclic(h, trivial_pair(h), 3);
    CohomologyReport baseline = hc_dimensions(cm, 2);

    // conjugate the whole structure by a random invertible degree-preserving map
    GradedMap p = rng.graded_map(h.space, h.space);
    while (rank(p) < h.dim()) p = rng.graded_map(h.space, h.space);
    GradedMap p_inv = solve_through(p, GradedMap::identity(h.space));
    GradedMap p2 = tensor_map(p, p);
    GradedMap p2_inv = tensor_map(p_inv, p_inv);

    BraidedHopfAlgebra conjugated{
        h.space,
        compose(p_inv, compose(h.mul, p2)),
        compose(p_inv, h.unit),
        compose(p2_inv, compose(h.comul, p)),
        compose(h.counit, p),
        compose(p_inv, compose(h.antipode, p)),
        h.braid,
    };
    REQUIRE(verify_hopf_axioms(conjugated).all_pass());

    CocyclicModule cm2 = build_cm_cocyclic(conjugated, trivial_pair(conjugated), 3);
    CohomologyReport changed = hc_dimensions(cm2, 2);
    REQUIRE(changed.rows.size() == baseline.rows.size());
    for (size_t i = 0; i < baseline.rows.size(); ++i) {
        CHECK(changed.rows[i].hh == baseline.rows[i].hh);
        CHECK(changed.rows[i].hc == baseline.rows[i].hc);
        CHECK(changed.rows[i].dim_lambda == baseline.rows[i].dim_lambda);
    }
}
