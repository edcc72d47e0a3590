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

#ifndef ANYONIC_GRADED_MAP_HPP
#define ANYONIC_GRADED_MAP_HPP

#include <span>
#include <tuple>
#include <vector>

#include "graded.hpp"

namespace anyonic {

struct MapEntry {
    int row;
    CyclotomicScalar value;
};

/**
 * A degree-preserving linear map between graded spaces, stored as a sparse
 * matrix (per-column entries sorted by row, no explicit zeros). Construction
 * rejects entries that would cross degrees, so every value of this type is a
 * morphism of the graded category. Immutable after construction; equality is
 * entry-wise and, thanks to the canonical scalar form, semantic.
 */
class GradedMap {
   public:
    GradedMap(GradedSpace source, GradedSpace target);  // zero map
    static GradedMap identity(const GradedSpace& space);
    static GradedMap from_triplets(GradedSpace source, GradedSpace target,
                                   const std::vector<std::tuple<int, int, CyclotomicScalar>>& entries);
    /// Plain linear map without the degree check. Reserved for data that is
    /// genuinely not a morphism of the category, e.g. a change of basis
    /// between different gradings of the same space.
    static GradedMap from_triplets_any(GradedSpace source, GradedSpace target,
                                       const std::vector<std::tuple<int, int, CyclotomicScalar>>& entries);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    const FieldPtr& field() const { return source_.field(); }

    const std::vector<MapEntry>& column(int c) const { return cols_[c]; }
    long nnz() const;
    bool is_zero() const;
    CyclotomicScalar entry(int r, int c) const;
    std::vector<CyclotomicScalar> dense_column(int c) const;
    std::vector<CyclotomicScalar> apply(const std::vector<CyclotomicScalar>& v) const;

    friend bool operator==(const GradedMap& a, const GradedMap& b);
    friend bool operator!=(const GradedMap& a, const GradedMap& b) { return !(a == b); }

   private:
    static GradedMap fill(GradedSpace source, GradedSpace target,
                          const std::vector<std::tuple<int, int, CyclotomicScalar>>& entries,
                          bool check_degrees);

    GradedSpace source_;
    GradedSpace target_;
    std::vector<std::vector<MapEntry>> cols_;

    friend GradedMap compose(const GradedMap& g, const GradedMap& f);
    friend GradedMap tensor_map(const GradedMap& f, const GradedMap& g);
    friend GradedMap operator+(const GradedMap& f, const GradedMap& g);
    friend GradedMap scalar_multiple(const CyclotomicScalar& s, const GradedMap& f);
};

/// g after f.
GradedMap compose(const GradedMap& g, const GradedMap& f);
/// Kronecker product consistent with the flat tensor slot order.
GradedMap tensor_map(const GradedMap& f, const GradedMap& g);
GradedMap tensor_many(std::span<const GradedMap> factors);
GradedMap tensor_many(std::initializer_list<GradedMap> factors);

GradedMap operator+(const GradedMap& f, const GradedMap& g);
GradedMap operator-(const GradedMap& f, const GradedMap& g);
GradedMap negate(const GradedMap& f);
GradedMap scalar_multiple(const CyclotomicScalar& s, const GradedMap& f);
/// k-th composition power of an endomorphism, k >= 0.
GradedMap power_of(const GradedMap& f, int k);

bool is_degree_preserving(const GradedMap& f);
/// Throws Error(Errc::shape_mismatch) naming `what` when f crosses degrees.
void require_degree_preserving(const GradedMap& f, const std::string& what);

}  // namespace anyonic

#endif
