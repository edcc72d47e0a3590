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

#ifndef ANYONIC_LINALG_HPP
#define ANYONIC_LINALG_HPP

#include <optional>
#include <utility>
#include <vector>

#include "graded_map.hpp"

namespace anyonic {

/**
 * Incremental exact echelon span of column vectors over Q(zeta_n).
 * Deterministic: vectors are processed in insertion order and pivots are
 * always the first nonzero coordinate. Inserted vectors must be homogeneous
 * or the grading of derived spaces is meaningless (all producers in this
 * library insert homogeneous columns).
 *
 * With tracking enabled, each echelon vector remembers its expression in the
 * independent inserted columns, so membership tests can also return exact
 * coordinates.
 */
class ColumnSpan {
   public:
    explicit ColumnSpan(GradedSpace ambient, bool track_coordinates = false);

    /// Returns true when the vector enlarged the span.
    bool insert(const std::vector<CyclotomicScalar>& v);

    int rank() const { return static_cast<int>(echelon_.size()); }
    const GradedSpace& ambient() const { return ambient_; }

    /// Remainder of v after reduction against the echelon basis.
    std::vector<CyclotomicScalar> reduce(const std::vector<CyclotomicScalar>& v) const;
    bool contains(const std::vector<CyclotomicScalar>& v) const;

    /// Coordinates of v over the independent inserted columns (insertion
    /// order); nullopt when v is outside the span. Requires tracking.
    std::optional<std::vector<CyclotomicScalar>> coordinates(const std::vector<CyclotomicScalar>& v) const;

    /// Pivot slot of each echelon vector, in insertion order.
    const std::vector<int>& leads() const { return leads_; }

    /// k-th echelon basis vector (normalized, leading coefficient 1).
    const std::vector<CyclotomicScalar>& basis_vector(int k) const { return echelon_[k].vec; }

   private:
    struct Piece {
        std::vector<CyclotomicScalar> vec;    // normalized, leading coefficient 1
        std::vector<CyclotomicScalar> coord;  // expression over independent inserts
        int lead;
    };

    int find_lead(const std::vector<CyclotomicScalar>& v) const;

    GradedSpace ambient_;
    bool track_;
    std::vector<Piece> echelon_;
    std::vector<int> leads_;
};

struct KernelResult {
    GradedSpace space;
    GradedMap inclusion;  // space -> source of the original map
};

struct ImageResult {
    GradedSpace space;
    GradedMap inclusion;  // space -> target of the original map
};

struct QuotientResult {
    GradedSpace space;      // target / image
    GradedMap projection;   // target -> space
    GradedMap section;      // space -> target, projection o section = id
    int relation_rank;      // rank of the divided-out subspace
    ColumnSpan relations;   // echelon of the divided-out subspace, for membership tests
};

int rank(const GradedMap& f);
KernelResult kernel(const GradedMap& f);
ImageResult image(const GradedMap& f);
QuotientResult cokernel(const GradedMap& f);

/// X with inclusion o X = f. Throws Error(Errc::precondition) when some
/// column of f is not contained in the span of the inclusion.
GradedMap solve_through(const GradedMap& inclusion, const GradedMap& f);

}  // namespace anyonic

#endif
