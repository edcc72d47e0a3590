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

#include "anyonic/serialization.hpp"

namespace anyonic {

namespace {

[[noreturn]] void parse_fail(const std::string& context, const std::string& what) {
    fail(Errc::parse, context + ": " + what);
}

const Json& expect(const Json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) parse_fail(context, std::string("missing field '") + key + "'");
    return *it;
}

int expect_int(const Json& j, const char* key, const std::string& context) {
    const Json& v = expect(j, key, context);
    if (!v.is_number_integer()) parse_fail(context, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> expect_int_array(const Json& j, const char* key, const std::string& context) {
    const Json& v = expect(j, key, context);
    if (!v.is_array()) parse_fail(context, std::string("field '") + key + "' must be an array");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) parse_fail(context, std::string("field '") + key + "' must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& context) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(context, e.what());  // carries byte/line position
    }
}

Json scalar_to_json(const CyclotomicScalar& s) {
    Json out = Json::array();
    for (const auto& c : s.coeffs()) out.push_back(to_string(c));
    return out;
}

CyclotomicScalar scalar_from_json(const FieldPtr& field, const Json& j, const std::string& context) {
    if (!j.is_array() || static_cast<int>(j.size()) != field->degree())
        parse_fail(context, "scalar must be an array of " + std::to_string(field->degree()) +
                                " rational strings");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_string()) parse_fail(context, "scalar coefficients must be strings");
        coeffs.push_back(parse_rational(x.get<std::string>()));
    }
    return CyclotomicScalar::from_coeffs(field, std::move(coeffs));
}

Json map_to_json(const GradedMap& f) {
    Json out = Json::array();
    for (int c = 0; c < f.source().total_dim(); ++c)
        for (const auto& e : f.column(c)) {
            Json triplet = Json::array();
            triplet.push_back(e.row);
            triplet.push_back(c);
            triplet.push_back(scalar_to_json(e.value));
            out.push_back(std::move(triplet));
        }
    return out;
}

GradedMap map_from_json(const GradedSpace& source, const GradedSpace& target, const Json& j,
                        const std::string& context) {
    if (!j.is_array()) parse_fail(context, "map must be an array of [row, col, scalar] triplets");
    std::vector<std::tuple<int, int, CyclotomicScalar>> entries;
    entries.reserve(j.size());
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
            parse_fail(context, "map entries must be [row, col, scalar] triplets");
        entries.emplace_back(t[0].get<int>(), t[1].get<int>(),
                             scalar_from_json(source.field(), t[2], context));
    }
    try {
        return GradedMap::from_triplets(source, target, entries);
    } catch (const Error& e) {
        parse_fail(context, e.what());
    }
}

Json space_to_json(const GradedSpace& v) {
    Json out = Json::object();
    out["n"] = v.modulus();
    Json dims = Json::array();
    for (int d : v.dims()) dims.push_back(d);
    out["dims"] = dims;
    return out;
}

Json hopf_to_json(const BraidedHopfAlgebra& h, const std::optional<ModularPair>& pair) {
    Json out = Json::object();
    out["n"] = h.space.modulus();
    Json dims = Json::array();
    for (int d : h.space.dims()) dims.push_back(d);
    out["dims"] = dims;
    if (h.braid == BraidKind::flip) out["braiding"] = "flip";
    out["m"] = map_to_json(h.mul);
    out["eta"] = map_to_json(h.unit);
    out["delta_comul"] = map_to_json(h.comul);
    out["epsilon"] = map_to_json(h.counit);
    out["antipode"] = map_to_json(h.antipode);
    if (pair) {
        Json p = Json::object();
        p["delta"] = map_to_json(pair->character);
        p["sigma"] = map_to_json(pair->grouplike);
        out["modular_pair"] = std::move(p);
    }
    return out;
}

BraidedHopfAlgebra hopf_from_json(const Json& j) {
    const std::string context = "hopf file";
    if (!j.is_object()) parse_fail(context, "top level must be an object");
    int n = expect_int(j, "n", context);
    if (n < 1) parse_fail(context, "n must be positive");
    std::vector<int> dims = expect_int_array(j, "dims", context);
    if (static_cast<int>(dims.size()) != n) parse_fail(context, "dims must have length n");
    FieldPtr field = CyclotomicField::get(n);
    GradedSpace H(field, dims);
    GradedSpace HH = tensor_space(H, H);
    GradedSpace I = GradedSpace::unit(field);

    BraidKind braid = BraidKind::anyonic;
    if (auto it = j.find("braiding"); it != j.end()) {
        std::string b = it->is_string() ? it->get<std::string>() : "";
        if (b == "flip")
            braid = BraidKind::flip;
        else if (b == "anyonic")
            braid = BraidKind::anyonic;
        else
            parse_fail(context, "braiding must be \"anyonic\" or \"flip\"");
    }

    return BraidedHopfAlgebra{
        H,
        map_from_json(HH, H, expect(j, "m", context), context + ", field 'm'"),
        map_from_json(I, H, expect(j, "eta", context), context + ", field 'eta'"),
        map_from_json(H, HH, expect(j, "delta_comul", context), context + ", field 'delta_comul'"),
        map_from_json(H, I, expect(j, "epsilon", context), context + ", field 'epsilon'"),
        map_from_json(H, H, expect(j, "antipode", context), context + ", field 'antipode'"),
        braid,
    };
}

ModularPair pair_from_hopf_json(const BraidedHopfAlgebra& h, const Json& j) {
    auto it = j.find("modular_pair");
    if (it == j.end()) return trivial_pair(h);
    return pair_from_json(h, *it);
}

ModularPair pair_from_json(const BraidedHopfAlgebra& h, const Json& j) {
    const std::string context = "modular pair";
    if (!j.is_object()) parse_fail(context, "must be an object");
    GradedSpace I = h.unit_object();
    return ModularPair{
        map_from_json(h.space, I, expect(j, "delta", context), context + ", field 'delta'"),
        map_from_json(I, h.space, expect(j, "sigma", context), context + ", field 'sigma'"),
    };
}

Json rmatrix_to_json(const OrdinaryHopf& h, const QuasitriangularElement& r) {
    Json out = Json::object();
    out["n"] = h.space.modulus();
    Json dims = Json::array();
    for (int d : h.space.dims()) dims.push_back(d);
    out["dims"] = dims;
    Json coeffs = Json::array();
    for (const auto& e : r.element.column(0)) {
        Json pair = Json::array();
        pair.push_back(e.row);
        pair.push_back(scalar_to_json(e.value));
        coeffs.push_back(std::move(pair));
    }
    out["r"] = std::move(coeffs);
    return out;
}

QuasitriangularElement rmatrix_from_json(const OrdinaryHopf& h, const Json& j) {
    const std::string context = "r-matrix file";
    if (!j.is_object()) parse_fail(context, "top level must be an object");
    int n = expect_int(j, "n", context);
    if (n != h.space.modulus()) parse_fail(context, "r-matrix modulus does not match the Hopf algebra");
    const Json& coeffs = expect(j, "r", context);
    if (!coeffs.is_array()) parse_fail(context, "field 'r' must be an array of [index, scalar] pairs");
    GradedSpace HH = tensor_space(h.space, h.space);
    std::vector<std::tuple<int, int, CyclotomicScalar>> entries;
    for (const auto& p : coeffs) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer())
            parse_fail(context, "field 'r' must hold [index, scalar] pairs");
        entries.emplace_back(p[0].get<int>(), 0, scalar_from_json(h.field(), p[1], context));
    }
    try {
        return {GradedMap::from_triplets(GradedSpace::unit(h.field()), HH, entries)};
    } catch (const Error& e) {
        parse_fail(context, e.what());
    }
}

void coalgebra_from_json(const BraidedHopfAlgebra& h, const Json& j, TripleData& into) {
    const std::string context = "coalgebra file";
    if (!j.is_object()) parse_fail(context, "top level must be an object");
    int n = expect_int(j, "n", context);
    if (n != h.space.modulus()) parse_fail(context, "coalgebra modulus does not match the Hopf algebra");
    std::vector<int> dims = expect_int_array(j, "dims", context);
    if (static_cast<int>(dims.size()) != n) parse_fail(context, "dims must have length n");
    GradedSpace C(h.field(), dims);
    into.coalgebra = C;
    into.comul_c = map_from_json(C, tensor_space(C, C), expect(j, "delta_comul", context),
                                 context + ", field 'delta_comul'");
    into.counit_c = map_from_json(C, h.unit_object(), expect(j, "epsilon", context),
                                  context + ", field 'epsilon'");
    into.action_c = map_from_json(tensor_space(h.space, C), C, expect(j, "action", context),
                                  context + ", field 'action'");
}

void module_from_json(const BraidedHopfAlgebra& h, const Json& j, TripleData& into) {
    const std::string context = "module file";
    if (!j.is_object()) parse_fail(context, "top level must be an object");
    int n = expect_int(j, "n", context);
    if (n != h.space.modulus()) parse_fail(context, "module modulus does not match the Hopf algebra");
    std::vector<int> dims = expect_int_array(j, "dims", context);
    if (static_cast<int>(dims.size()) != n) parse_fail(context, "dims must have length n");
    GradedSpace M(h.field(), dims);
    into.module = M;
    into.action_m = map_from_json(tensor_space(h.space, M), M, expect(j, "action", context),
                                  context + ", field 'action'");
    into.coaction_m = map_from_json(M, tensor_space(h.space, M), expect(j, "coaction", context),
                                    context + ", field 'coaction'");
    into.right_action_m.reset();
    if (auto it = j.find("right_action"); it != j.end())
        into.right_action_m = map_from_json(tensor_space(M, h.space), M, *it,
                                            context + ", field 'right_action'");
}

Json report_to_json(const Report& r) {
    Json out = Json::object();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json entry = Json::object();
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        if (!c.witness.empty()) entry["witness"] = c.witness;
        checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    out["all_pass"] = r.all_pass();
    return out;
}

Json cohomology_to_json(const CohomologyReport& r) {
    Json out = Json::object();
    out["level"] = r.level;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json entry = Json::object();
        entry["degree"] = row.degree;
        entry["dim"] = row.dim_full;
        entry["dim_lambda"] = row.dim_lambda;
        entry["hh"] = row.hh;
        entry["hc"] = row.hc;
        rows.push_back(std::move(entry));
    }
    out["rows"] = std::move(rows);
    return out;
}

Json cocyclic_operators_to_json(const CocyclicModule& cm) {
    Json out = Json::object();
    out["level"] = cm.level();
    Json levels = Json::array();
    for (const auto& space : cm.levels) levels.push_back(space_to_json(space));
    out["spaces"] = std::move(levels);

    Json faces = Json::array();
    for (int n = 1; n <= cm.level(); ++n) {
        Json per_level = Json::array();
        for (const auto& f : cm.faces[n]) per_level.push_back(map_to_json(f));
        faces.push_back(std::move(per_level));
    }
    out["faces"] = std::move(faces);

    Json degens = Json::array();
    for (int n = 0; n + 1 <= cm.level(); ++n) {
        Json per_level = Json::array();
        for (const auto& s : cm.degeneracies[n]) per_level.push_back(map_to_json(s));
        degens.push_back(std::move(per_level));
    }
    out["degeneracies"] = std::move(degens);

    Json cyclic = Json::array();
    for (const auto& t : cm.cyclic) cyclic.push_back(map_to_json(t));
    out["cyclic"] = std::move(cyclic);
    return out;
}

}  // namespace anyonic
