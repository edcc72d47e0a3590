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

#include "anyonic/serialization.hpp"

using namespace anyonic;

TEST_CASE("scalars serialize to rational strings and back") {
    FieldPtr f5 = CyclotomicField::get(5);
    CyclotomicScalar value = CyclotomicScalar::zeta_power(f5, 3) * rat(-7, 3) +
                             CyclotomicScalar::from_rational(f5, rat(1, 2));
    Json j = scalar_to_json(value);
    CHECK(j.is_array());
    CHECK(j.size() == 4);
    CyclotomicScalar back = scalar_from_json(f5, j, "test");
    CHECK(back == value);

    CHECK_THROWS_AS(scalar_from_json(f5, Json::array({"1"}), "test"), Error);
    CHECK_THROWS_AS(scalar_from_json(f5, Json::array({"1", "x", "0", "0"}), "test"), Error);
}

TEST_CASE("hopf files round trip bit-exactly") {
    OrdinaryHopf h = czn_group_algebra(4);
    Json j = hopf_to_json(h, trivial_pair(h));
    std::string text = j.dump(2);

    BraidedHopfAlgebra back = hopf_from_json(parse_json(text, "round trip"));
    CHECK(back == h);
    ModularPair pair = pair_from_hopf_json(back, parse_json(text, "round trip"));
    CHECK(pair.character == h.counit);
    CHECK(pair.grouplike == h.unit);

    // emission is deterministic
    CHECK(hopf_to_json(back, trivial_pair(back)).dump(2) == text);
}

TEST_CASE("hopf files default to the trivial pair") {
    OrdinaryHopf h = czn_group_algebra(3);
    Json j = hopf_to_json(h);
    CHECK_FALSE(j.contains("modular_pair"));
    BraidedHopfAlgebra back = hopf_from_json(j);
    ModularPair pair = pair_from_hopf_json(back, j);
    CHECK(pair.character == h.counit);
    CHECK(pair.grouplike == h.unit);
}

TEST_CASE("r-matrix files round trip") {
    OrdinaryHopf h = czn_group_algebra(3);
    QuasitriangularElement r = czn_r_matrix(3);
    Json j = rmatrix_to_json(h, r);
    QuasitriangularElement back = rmatrix_from_json(h, j);
    CHECK(back.element == r.element);
}

TEST_CASE("malformed input is rejected with context") {
    CHECK_THROWS_AS(parse_json("{ not json", "test"), Error);

    OrdinaryHopf h = czn_group_algebra(2);
    Json j = hopf_to_json(h);
    Json missing = j;
    missing.erase("antipode");
    CHECK_THROWS_AS(hopf_from_json(missing), Error);

    Json bad_n = j;
    bad_n["n"] = -1;
    CHECK_THROWS_AS(hopf_from_json(bad_n), Error);

    Json bad_dims = j;
    bad_dims["dims"] = Json::array({1});
    CHECK_THROWS_AS(hopf_from_json(bad_dims), Error);

    // degree-crossing entries surface as parse errors with the field name
    Json crossing = j;
    crossing["dims"] = Json::array({1, 1});
    try {
        hopf_from_json(crossing);
        FAIL("expected a parse failure");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse);
    }
}

TEST_CASE("pair files parse against the algebra") {
    OrdinaryHopf h = czn_group_algebra(3);
    Json pair_json = Json::object();
    pair_json["delta"] = map_to_json(h.counit);
    pair_json["sigma"] = map_to_json(h.unit);
    ModularPair pair = pair_from_json(h, pair_json);
    CHECK(pair.character == h.counit);
    CHECK(pair.grouplike == h.unit);

    Json missing = Json::object();
    missing["delta"] = map_to_json(h.counit);
    CHECK_THROWS_AS(pair_from_json(h, missing), Error);
}

TEST_CASE("coefficient files populate triple data") {
    OrdinaryHopf h = czn_group_algebra(2);
    TripleData t = reduction_triple(h);

    Json coalgebra = Json::object();
    coalgebra["n"] = 2;
    coalgebra["dims"] = Json::array({2, 0});
    coalgebra["delta_comul"] = map_to_json(h.comul);
    coalgebra["epsilon"] = map_to_json(h.counit);
    coalgebra["action"] = map_to_json(h.mul);
    coalgebra_from_json(h, coalgebra, t);
    CHECK(t.coalgebra == h.space);
    CHECK(t.comul_c == h.comul);

    Json module = Json::object();
    module["n"] = 2;
    module["dims"] = Json::array({0, 0});
    GradedSpace zero(h.field(), {0, 0});
    module["action"] = map_to_json(GradedMap(tensor_space(h.space, zero), zero));
    module["coaction"] = map_to_json(GradedMap(zero, tensor_space(h.space, zero)));
    module_from_json(h, module, t);
    CHECK(t.module.total_dim() == 0);
    CHECK_FALSE(t.right_action_m.has_value());

    Json wrong_n = coalgebra;
    wrong_n["n"] = 3;
    CHECK_THROWS_AS(coalgebra_from_json(h, wrong_n, t), Error);
}

TEST_CASE("reports and tables serialize stably") {
    Report report;
    report.add("first", true);
    report.add("second", false, "column 3");
    Json j = report_to_json(report);
    CHECK(j["all_pass"] == false);
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["witness"] == "column 3");
    CHECK(report_to_json(report).dump() == j.dump());

    CohomologyReport table;
    table.level = 2;
    table.rows.push_back({0, 1, 1, 1, 1});
    Json tj = cohomology_to_json(table);
    CHECK(tj["rows"][0]["hc"] == 1);
}

TEST_CASE("operator dumps carry every operator") {
    OrdinaryHopf h = czn_group_algebra(2);
    CocyclicModule cm = build_cm_cocyclic(h, trivial_pair(h), 2);
    Json j = cocyclic_operators_to_json(cm);
    CHECK(j["level"] == 2);
    CHECK(j["faces"].size() == 2);        // levels 1 and 2
    CHECK(j["faces"][0].size() == 2);     // delta_0, delta_1 at level 1
    CHECK(j["faces"][1].size() == 3);
    CHECK(j["degeneracies"].size() == 2); // target levels 0 and 1
    CHECK(j["cyclic"].size() == 3);
}
