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

#ifndef ANYONIC_PIPELINE_HPP
#define ANYONIC_PIPELINE_HPP

#include "cohomology.hpp"
#include "transmutation.hpp"

namespace anyonic {

/**
 * End-to-end run for the cyclic group algebra: build (H, R), verify the
 * quasitriangular axioms, transmute, check that transmutation is trivial
 * here (coproduct and antipode unchanged, degree-zero concentration, flip
 * braiding squaring to the identity), build the cocyclic module for the
 * (epsilon, eta) pair, run the identity suite, and tabulate HH/HC.
 */
struct PipelineResult {
    int n = 0;
    int level = 0;
    Report quasitriangular;
    Report transmutation;   // triviality and braiding checks
    Report cocyclic;        // identity suite including the hypothesis checks
    CohomologyReport cohomology;
    bool all_pass = false;
};

PipelineResult run_pipeline(int n, int level, long cap = 1000000);

}  // namespace anyonic

#endif
