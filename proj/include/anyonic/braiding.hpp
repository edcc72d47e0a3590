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

#ifndef ANYONIC_BRAIDING_HPP
#define ANYONIC_BRAIDING_HPP

#include <vector>

#include "graded_map.hpp"

namespace anyonic {

/// Which braiding the ambient category uses. `anyonic` multiplies the flip
/// by the phase zeta^(|v||w|); `flip` is the plain symmetric transposition
/// (the q = 1 configuration).
enum class BraidKind { anyonic, flip };

/// psi_{V,W} : V (x) W -> W (x) V, homogeneous v (x) w |-> zeta^(|v||w|) w (x) v.
GradedMap braiding(const GradedSpace& v, const GradedSpace& w, BraidKind kind = BraidKind::anyonic);

/// The coefficient-1 transposition.
GradedMap flip_map(const GradedSpace& v, const GradedSpace& w);

struct SymmetryCheck {
    bool symmetric_pair;  // both composites psi psi are identities
    bool flip;            // psi_{V,W} is the plain transposition
};

/// Exact matrix test of the pair-symmetry conditions.
SymmetryCheck braid_symmetry_check(const GradedSpace& v, const GradedSpace& w,
                                   BraidKind kind = BraidKind::anyonic);

/// Arithmetic criterion on degree supports: the pair braids symmetrically iff
/// 2ij = 0 mod n for all i in supportA, j in supportB, and braids by the plain
/// flip iff ij = 0 mod n for all such pairs.
SymmetryCheck support_criterion(int n, const std::vector<int>& support_a,
                                const std::vector<int>& support_b);

}  // namespace anyonic

#endif
