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

#ifndef ANYONIC_HOPF_HPP
#define ANYONIC_HOPF_HPP

#include "braiding.hpp"
#include "report.hpp"

namespace anyonic {

/**
 * A Hopf algebra object in the braided category of graded vector spaces:
 * the six structure morphisms as degree-preserving maps, plus the braiding
 * convention the bialgebra compatibility law uses. The structure is plain
 * data; verify_hopf_axioms performs the exact axiom suite.
 */
struct BraidedHopfAlgebra {
    GradedSpace space;   // H
    GradedMap mul;       // m : H (x) H -> H
    GradedMap unit;      // eta : I -> H
    GradedMap comul;     // Delta : H -> H (x) H
    GradedMap counit;    // epsilon : H -> I
    GradedMap antipode;  // S : H -> H
    BraidKind braid = BraidKind::anyonic;

    const FieldPtr& field() const { return space.field(); }
    int dim() const { return space.total_dim(); }
    GradedSpace unit_object() const { return GradedSpace::unit(space.field()); }
};

bool operator==(const BraidedHopfAlgebra& a, const BraidedHopfAlgebra& b);

/// A character delta : H -> I together with a group-like sigma : I -> H.
struct ModularPair {
    GradedMap character;  // delta
    GradedMap grouplike;  // sigma
};

/// (epsilon, eta): the pair every Hopf algebra carries.
ModularPair trivial_pair(const BraidedHopfAlgebra& h);

/// Exact verification of all Hopf axioms: associativity, unit laws,
/// coassociativity, counit laws, counit/unit compatibility, the braided
/// bialgebra law, and both antipode laws. Fixed check order; failures carry
/// the first offending basis column as witness.
Report verify_hopf_axioms(const BraidedHopfAlgebra& h);

/// Character and group-like conditions for a modular pair.
Report verify_modular_pair(const BraidedHopfAlgebra& h, const ModularPair& pair);

/// Twisted antipode: the convolution (delta (x) S) o Delta. Equals S when
/// delta is the counit.
GradedMap twisted_antipode(const BraidedHopfAlgebra& h, const ModularPair& pair);

/// Delta^k : H -> H^(k+1); Delta^0 = id, left-iterated.
GradedMap iterated_coproduct(const BraidedHopfAlgebra& h, int k);

/**
 * The braided half-shuffle on H^(2n) that interleaves (a_1..a_n, b_1..b_n)
 * into (a_1, b_1, ..., a_n, b_n). It is the product over j = n-1 down to 1
 * (applied in that order) of 1^(j) (x) psi^(n-j) (x) 1^(j); each crossing of
 * b_j past a_i with i > j contributes a braiding phase. n = 1 gives the
 * identity.
 */
GradedMap braided_shuffle(const GradedSpace& h, int n, BraidKind kind = BraidKind::anyonic);

/// m_n : H^n (x) H^n -> H^n, the tensor-power multiplication
/// (m (x) ... (x) m) after the braided shuffle; m_1 = m.
GradedMap power_multiplication(const BraidedHopfAlgebra& h, int n);

/// Diagnostic: rank of S~^2 - Ad_sigma, where Ad_sigma(x) = sigma x sigma^-1.
/// Zero exactly when the twisted antipode squares to the inner automorphism.
int antipode_involution_defect(const BraidedHopfAlgebra& h, const ModularPair& pair);

}  // namespace anyonic

#endif
