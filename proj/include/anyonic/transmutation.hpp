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

#ifndef ANYONIC_TRANSMUTATION_HPP
#define ANYONIC_TRANSMUTATION_HPP

#include "hopf.hpp"
#include "linalg.hpp"

namespace anyonic {

/// An ordinary Hopf algebra: braided Hopf data concentrated in degree zero,
/// where the braiding is the plain flip.
using OrdinaryHopf = BraidedHopfAlgebra;

/// An invertible element R of H (x) H, stored as a column I -> H (x) H.
struct QuasitriangularElement {
    GradedMap element;
};

/// The group algebra of the cyclic group of order n over Q(zeta_n):
/// basis g^0..g^(n-1), m(g^a (x) g^b) = g^(a+b), Delta(g^a) = g^a (x) g^a,
/// epsilon = 1, S(g^a) = g^(-a).
OrdinaryHopf czn_group_algebra(int n);

/// The nontrivial quasitriangular structure on the cyclic group algebra:
/// R = (1/n) sum_{a,b} zeta^(-ab) g^a (x) g^b.
QuasitriangularElement czn_r_matrix(int n);

/// Exact checks: (Delta (x) 1)R = R13 R23, (1 (x) Delta)R = R13 R12,
/// R Delta(h) = Delta_op(h) R, and invertibility of R in H (x) H.
Report verify_quasitriangular(const OrdinaryHopf& h, const QuasitriangularElement& r);

/// Conjugation action H (x) H -> H, a (x) h |-> a^(1) h S(a^(2)).
GradedMap conjugation_action(const OrdinaryHopf& h);

/// Left regular action (the multiplication) of H on itself.
GradedMap regular_action(const OrdinaryHopf& h);

/// Action through the counit: everything acts as its counit scalar.
GradedMap trivial_action(const OrdinaryHopf& h, const GradedSpace& v);

struct GradingResult {
    GradedSpace graded;      // same underlying space with the action grading
    GradedMap to_original;   // change of basis P : graded -> original
};

/**
 * Decomposes a module V over the cyclic group algebra into the eigenspaces
 * of the generator action: degree k is the exact kernel of (g . -) - zeta^k.
 * Throws Error(Errc::precondition) when the eigenspaces do not exhaust V
 * (the module does not live in the anyonic category).
 */
GradingResult grading_from_action(const OrdinaryHopf& h, const GradedSpace& v, const GradedMap& action);

/**
 * Transmutation: turns a quasitriangular ordinary Hopf algebra into a Hopf
 * algebra in its own module category. The multiplication, unit and counit
 * are kept; the coproduct becomes h |-> h^(1) S(R_2) (x) R_1 > h^(2) and the
 * antipode h |-> R_2 S(R_1 > h), with > the conjugation action. The result
 * is graded by the conjugation eigen-degrees and uses the anyonic braiding.
 */
BraidedHopfAlgebra transmute(const OrdinaryHopf& h, const QuasitriangularElement& r);

/// The braiding the quasitriangular structure induces on a pair of modules:
/// v (x) w |-> R_2 > w (x) R_1 > v (plain linear maps, no grading needed).
GradedMap braiding_from_r(const OrdinaryHopf& h, const QuasitriangularElement& r,
                          const GradedSpace& v, const GradedMap& action_v,
                          const GradedSpace& w, const GradedMap& action_w);

}  // namespace anyonic

#endif
