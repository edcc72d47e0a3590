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

#ifndef ANYONIC_SERIALIZATION_HPP
#define ANYONIC_SERIALIZATION_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "cohomology.hpp"
#include "transmutation.hpp"

namespace anyonic {

// All interchange is JSON with exact rational strings; no floats anywhere.
// Maps are sparse triplet lists [row, col, scalar], scalars are arrays of
// phi(n) rational strings in the power basis, indices are the canonical
// basis slots. Emission uses a fixed key order so identical inputs produce
// byte-identical files.
using Json = nlohmann::ordered_json;

Json scalar_to_json(const CyclotomicScalar& s);
CyclotomicScalar scalar_from_json(const FieldPtr& field, const Json& j, const std::string& context);

Json map_to_json(const GradedMap& f);
GradedMap map_from_json(const GradedSpace& source, const GradedSpace& target, const Json& j,
                        const std::string& context);

Json space_to_json(const GradedSpace& v);

Json hopf_to_json(const BraidedHopfAlgebra& h, const std::optional<ModularPair>& pair = std::nullopt);
BraidedHopfAlgebra hopf_from_json(const Json& j);
/// The pair stored in a Hopf file, or (epsilon, eta) when absent.
ModularPair pair_from_hopf_json(const BraidedHopfAlgebra& h, const Json& j);
/// A standalone pair file {"delta": ..., "sigma": ...}.
ModularPair pair_from_json(const BraidedHopfAlgebra& h, const Json& j);

Json rmatrix_to_json(const OrdinaryHopf& h, const QuasitriangularElement& r);
QuasitriangularElement rmatrix_from_json(const OrdinaryHopf& h, const Json& j);

/// Coalgebra file {"n","dims","delta_comul","epsilon","action"}; the action
/// is H (x) C -> C against the supplied Hopf algebra.
void coalgebra_from_json(const BraidedHopfAlgebra& h, const Json& j, TripleData& into);
/// Module file {"n","dims","action","coaction"[,"right_action"]}.
void module_from_json(const BraidedHopfAlgebra& h, const Json& j, TripleData& into);

Json report_to_json(const Report& r);
Json cohomology_to_json(const CohomologyReport& r);
/// Every operator of the family with shape metadata, one object.
Json cocyclic_operators_to_json(const CocyclicModule& cm);

Json parse_json(const std::string& text, const std::string& context);

}  // namespace anyonic

#endif
