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

#ifndef ANYONIC_GRADED_HPP
#define ANYONIC_GRADED_HPP

#include <memory>
#include <span>
#include <vector>

#include "cyclotomic.hpp"

namespace anyonic {

struct BasisVector {
    int degree;  // in [0, n)
    int index;   // within the degree component
};

/**
 * A finite-dimensional Z_n-graded vector space over Q(zeta_n), given by an
 * ordered basis together with a degree per basis slot.
 *
 * Spaces constructed from a dimension vector enumerate their basis sorted by
 * (degree, index within degree). Tensor products keep the flat left-factor-
 * major slot order index(v (x) w) = index(v) * dim(W) + index(w) instead of
 * re-sorting; this makes the monoidal structure strictly associative and
 * strictly unital at the level of indices, so composite operators never need
 * explicit associator or unitor moves. Cheap to copy (shared immutable data).
 */
class GradedSpace {
   public:
    GradedSpace(const FieldPtr& field, std::vector<int> dims);
    static GradedSpace from_slot_degrees(const FieldPtr& field, std::vector<int> slot_degrees);
    static GradedSpace unit(const FieldPtr& field);

    const FieldPtr& field() const;
    int modulus() const;  // n
    int total_dim() const;
    const std::vector<int>& dims() const;
    const std::vector<int>& slot_degrees() const;
    int slot_degree(int slot) const;

    BasisVector basis_vector(int slot) const;
    int slot(const BasisVector& bv) const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b);
    friend bool operator!=(const GradedSpace& a, const GradedSpace& b) { return !(a == b); }

   private:
    struct Data;
    static std::shared_ptr<const Data> make(const FieldPtr& field, std::vector<int> slot_degrees);
    explicit GradedSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;
};

/// Monoidal product; degrees add mod n, slots flatten left-factor major.
GradedSpace tensor_space(const GradedSpace& v, const GradedSpace& w);
/// k-fold power, k = 0 gives the unit object.
GradedSpace tensor_power(const GradedSpace& v, int k);

/// Flat index arithmetic for multi-factor tensor bases (left-associated).
class TensorIndexer {
   public:
    explicit TensorIndexer(std::vector<int> factor_dims);
    int factors() const { return static_cast<int>(dims_.size()); }
    int dim(int i) const { return dims_[i]; }
    int total() const { return total_; }
    int flatten(std::span<const int> multi) const;
    std::vector<int> unflatten(int slot) const;

   private:
    std::vector<int> dims_;
    int total_;
};

}  // namespace anyonic

#endif
