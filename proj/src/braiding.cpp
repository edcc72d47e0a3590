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

#include "anyonic/braiding.hpp"

namespace anyonic {

GradedMap braiding(const GradedSpace& v, const GradedSpace& w, BraidKind kind) {
    if (v.modulus() != w.modulus()) fail(Errc::field_mismatch, "braiding across different fields");
    const FieldPtr& field = v.field();
    std::vector<std::tuple<int, int, CyclotomicScalar>> entries;
    entries.reserve(static_cast<size_t>(v.total_dim()) * w.total_dim());
    for (int i = 0; i < v.total_dim(); ++i) {
        for (int j = 0; j < w.total_dim(); ++j) {
            int col = i * w.total_dim() + j;
            int row = j * v.total_dim() + i;
            CyclotomicScalar phase =
                kind == BraidKind::flip
                    ? CyclotomicScalar::one(field)
                    : CyclotomicScalar::zeta_power(
                          field, static_cast<long>(v.slot_degree(i)) * w.slot_degree(j));
            entries.emplace_back(row, col, std::move(phase));
        }
    }
    return GradedMap::from_triplets(tensor_space(v, w), tensor_space(w, v), entries);
}

GradedMap flip_map(const GradedSpace& v, const GradedSpace& w) {
    return braiding(v, w, BraidKind::flip);
}

SymmetryCheck braid_symmetry_check(const GradedSpace& v, const GradedSpace& w, BraidKind kind) {
    GradedMap vw = braiding(v, w, kind);
    GradedMap wv = braiding(w, v, kind);
    bool symmetric = compose(wv, vw) == GradedMap::identity(tensor_space(v, w)) &&
                     compose(vw, wv) == GradedMap::identity(tensor_space(w, v));
    bool flip = vw == flip_map(v, w);
    return {symmetric, flip};
}

SymmetryCheck support_criterion(int n, const std::vector<int>& support_a,
                                const std::vector<int>& support_b) {
    if (n < 1) fail(Errc::invalid_argument, "support criterion needs n >= 1");
    bool symmetric = true;
    bool flip = true;
    for (int i : support_a) {
        if (i < 0 || i >= n) fail(Errc::invalid_argument, "support degree out of range");
        for (int j : support_b) {
            if (j < 0 || j >= n) fail(Errc::invalid_argument, "support degree out of range");
            long ij = static_cast<long>(i) * j;
            if ((2 * ij) % n != 0) symmetric = false;
            if (ij % n != 0) flip = false;
        }
    }
    return {symmetric, flip};
}

}  // namespace anyonic
