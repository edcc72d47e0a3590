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

#ifndef ANYONIC_COHOMOLOGY_HPP
#define ANYONIC_COHOMOLOGY_HPP

#include "cocyclic.hpp"

namespace anyonic {

/// D^0..D^N with differentials b_n : D^(n-1) -> D^n satisfying b b = 0.
struct CochainComplex {
    std::vector<GradedSpace> spaces;
    std::vector<GradedMap> differentials;  // differentials[n] : spaces[n-1] -> spaces[n], n >= 1
};

/// b_n = sum_i (-1)^i delta_i : C^(n-1) -> C^n.
GradedMap hochschild_differential(const CocyclicModule& cm, int n);

struct SubcomplexLevel {
    GradedSpace space;
    GradedMap inclusion;
};

/// ker(id - lambda_n) with lambda_n = (-1)^n tau_n. Requires cyclicity
/// (para_defect zero) at the level; otherwise Error(Errc::precondition).
SubcomplexLevel cyclic_subcomplex(const CocyclicModule& cm, int n);

/// The Hochschild complex on the full spaces; checks b b = 0.
CochainComplex hochschild_complex(const CocyclicModule& cm);
/// The same differential restricted to the lambda-fixed subspaces; checks
/// closure of the subcomplex under b.
CochainComplex lambda_complex(const CocyclicModule& cm);

struct CohomologyRow {
    int degree;
    int dim_full;    // dim C^n
    int dim_lambda;  // dim of the lambda-fixed subspace
    int hh;          // Hochschild cohomology dimension
    int hc;          // cyclic cohomology dimension
};

struct CohomologyReport {
    int level;  // data bound the dimensions were computed from
    std::vector<CohomologyRow> rows;
};

/// Exact HH/HC dimensions in degrees 0..up_to; needs data to level
/// up_to + 1 (Error(Errc::level_bound) otherwise). Characteristic zero is
/// built in, so the lambda subcomplex computes cyclic cohomology.
CohomologyReport hc_dimensions(const CocyclicModule& cm, int up_to);

}  // namespace anyonic

#endif
