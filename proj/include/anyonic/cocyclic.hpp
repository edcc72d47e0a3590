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

#ifndef ANYONIC_COCYCLIC_HPP
#define ANYONIC_COCYCLIC_HPP

#include <optional>

#include "hopf.hpp"
#include "linalg.hpp"

namespace anyonic {

/**
 * A (para-)cocyclic module up to a finite level N: spaces C^0..C^N with
 * faces delta_i : C^(n-1) -> C^n (n = 1..N, i = 0..n), degeneracies
 * sigma_i : C^(n+1) -> C^n (n = 0..N-1, i = 0..n) and cyclic operators
 * tau_n : C^n -> C^n (n = 0..N), all stored as explicit matrices.
 */
struct CocyclicModule {
    std::vector<GradedSpace> levels;                   // C^0..C^N
    std::vector<std::vector<GradedMap>> faces;         // faces[n][i], valid for n >= 1
    std::vector<std::vector<GradedMap>> degeneracies;  // degeneracies[n][i], n <= N-1
    std::vector<GradedMap> cyclic;                     // cyclic[n]
    Report build_checks;  // structure validity and braid-symmetry hypotheses, recorded at build

    int level() const { return static_cast<int>(levels.size()) - 1; }
};

struct BuildOptions {
    long cap = 1000000;        // guardrail: (dim C^N)^2 and per-operator entries must stay under this
    bool enforce_valid = true; // fail on broken input instead of recording and proceeding
};

/**
 * The cocyclic module of a braided Hopf algebra with a modular pair:
 * C^0 = I, C^n = H^n; delta_0 inserts the unit, inner faces apply the
 * coproduct at a slot, delta_n appends sigma; degeneracies apply the counit;
 * tau_n applies the iterated coproduct of the twisted antipode to the first
 * factor, appends sigma and multiplies with m_n; tau_0 = id.
 */
CocyclicModule build_cm_cocyclic(const BraidedHopfAlgebra& h, const ModularPair& pair, int level,
                                 const BuildOptions& options = {});

/// The full exact identity suite: cosimplicial relations, mixed relations,
/// the cyclic compatibilities and tau_n^(n+1) = id, at every index
/// combination expressible within the stored level bound.
Report verify_cocyclic_identities(const CocyclicModule& cm);

/// rank(tau_n^(n+1) - id): zero exactly when cyclicity holds at level n.
int para_defect(const CocyclicModule& cm, int n);

/**
 * Coefficient data: a module coalgebra C and a module-with-coaction M over H.
 * The optional right action is the balancing used for the quotient by the
 * diagonal action; when absent it defaults to m < h = S(h) > m (antipode
 * twist of the left action, braided past M).
 */
struct TripleData {
    BraidedHopfAlgebra hopf;
    GradedSpace coalgebra;   // C
    GradedMap comul_c;       // Delta_C : C -> C (x) C
    GradedMap counit_c;      // epsilon_C : C -> I
    GradedMap action_c;      // phi_C : H (x) C -> C
    GradedSpace module;      // M
    GradedMap action_m;      // H (x) M -> M
    GradedMap coaction_m;    // rho_M : M -> H (x) M
    std::optional<GradedMap> right_action_m;  // M (x) H -> M
};

/// M = I with trivial (co)action, C = H acting on itself by multiplication.
TripleData reduction_triple(const BraidedHopfAlgebra& h);

/// Structural checks: coalgebra axioms for C, module axioms for both
/// actions, coalgebra-map compatibility of the action, coaction axioms,
/// and (recorded, never fatal) the four pair-symmetry hypotheses.
Report verify_triple_data(const TripleData& t);

/// The ambient para-cocyclic family on C^n = M (x) C^(n+1) given by the
/// coefficient data, before any quotient.
CocyclicModule build_triple_paracocyclic(const TripleData& t, int level, const BuildOptions& options = {});

/// M (x)_H C^(n+1): the cokernel of the balancing map
/// (right action (x) 1) - (1 (x) diagonal action) on M (x) H (x) C^(n+1).
struct BalancedQuotient {
    GradedSpace ambient;
    QuotientResult quotient;
};

BalancedQuotient balanced_quotient(const TripleData& t, int n);

struct InducedResult {
    bool well_defined = false;   // op maps source relations into target relations
    std::optional<GradedMap> induced;
    std::string witness;         // first relation column escaping the target relations
};

/// Pushes an ambient operator down to the balanced quotients; well-defined
/// exactly when the relation subspace is preserved.
InducedResult induce_on_quotient(const GradedMap& op, const BalancedQuotient& source,
                                 const BalancedQuotient& target);

struct TripleCocyclic {
    CocyclicModule ambient;
    std::vector<BalancedQuotient> quotients;  // one per level
    CocyclicModule induced;
    Report induction_checks;  // well-definedness of every operator
};

/// Full pipeline for coefficient data: ambient family, balanced quotients,
/// induced operators. Induction failures are recorded, and the offending
/// operator is replaced by a zero map so the report stays inspectable.
TripleCocyclic build_triple_quotient(const TripleData& t, int level, const BuildOptions& options = {});

}  // namespace anyonic

#endif
