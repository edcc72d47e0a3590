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

#include "anyonic/graded_map.hpp"

#include <map>

namespace anyonic {

GradedMap::GradedMap(GradedSpace source, GradedSpace target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.modulus() != target_.modulus())
        fail(Errc::field_mismatch, "map between spaces over different fields");
    cols_.resize(source_.total_dim());
}

GradedMap GradedMap::identity(const GradedSpace& space) {
    GradedMap id(space, space);
    CyclotomicScalar one = CyclotomicScalar::one(space.field());
    for (int c = 0; c < space.total_dim(); ++c) id.cols_[c].push_back({c, one});
    return id;
}

GradedMap GradedMap::fill(GradedSpace source, GradedSpace target,
                          const std::vector<std::tuple<int, int, CyclotomicScalar>>& entries,
                          bool check_degrees) {
    GradedMap out(std::move(source), std::move(target));
    std::vector<std::map<int, CyclotomicScalar>> acc(out.source_.total_dim());
    for (const auto& [r, c, v] : entries) {
        if (c < 0 || c >= out.source_.total_dim() || r < 0 || r >= out.target_.total_dim())
            fail(Errc::shape_mismatch, "matrix entry out of range");
        if (v.field()->order() != out.source_.modulus())
            fail(Errc::field_mismatch, "matrix entry from a different field");
        auto it = acc[c].find(r);
        if (it == acc[c].end())
            acc[c].emplace(r, v);
        else
            it->second += v;
    }
    for (int c = 0; c < out.source_.total_dim(); ++c) {
        for (auto& [r, v] : acc[c]) {
            if (v.is_zero()) continue;
            if (check_degrees && out.target_.slot_degree(r) != out.source_.slot_degree(c))
                fail(Errc::shape_mismatch, "matrix entry crosses degrees: row " + std::to_string(r) +
                                               ", col " + std::to_string(c));
            out.cols_[c].push_back({r, v});
        }
    }
    return out;
}

GradedMap GradedMap::from_triplets(GradedSpace source, GradedSpace target,
                                   const std::vector<std::tuple<int, int, CyclotomicScalar>>& entries) {
    return fill(std::move(source), std::move(target), entries, true);
}

GradedMap GradedMap::from_triplets_any(GradedSpace source, GradedSpace target,
                                       const std::vector<std::tuple<int, int, CyclotomicScalar>>& entries) {
    return fill(std::move(source), std::move(target), entries, false);
}

long GradedMap::nnz() const {
    long count = 0;
    for (const auto& col : cols_) count += static_cast<long>(col.size());
    return count;
}

bool GradedMap::is_zero() const { return nnz() == 0; }

CyclotomicScalar GradedMap::entry(int r, int c) const {
    for (const auto& e : cols_[c])
        if (e.row == r) return e.value;
    return CyclotomicScalar::zero(field());
}

std::vector<CyclotomicScalar> GradedMap::dense_column(int c) const {
    std::vector<CyclotomicScalar> out(target_.total_dim(), CyclotomicScalar::zero(field()));
    for (const auto& e : cols_[c]) out[e.row] = e.value;
    return out;
}

std::vector<CyclotomicScalar> GradedMap::apply(const std::vector<CyclotomicScalar>& v) const {
    if (static_cast<int>(v.size()) != source_.total_dim())
        fail(Errc::shape_mismatch, "vector length does not match the source dimension");
    std::vector<CyclotomicScalar> out(target_.total_dim(), CyclotomicScalar::zero(field()));
    for (int c = 0; c < source_.total_dim(); ++c) {
        if (v[c].is_zero()) continue;
        for (const auto& e : cols_[c]) out[e.row] += e.value * v[c];
    }
    return out;
}

bool operator==(const GradedMap& a, const GradedMap& b) {
    if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
    for (int c = 0; c < a.source_.total_dim(); ++c) {
        const auto& ca = a.cols_[c];
        const auto& cb = b.cols_[c];
        if (ca.size() != cb.size()) return false;
        for (size_t k = 0; k < ca.size(); ++k)
            if (ca[k].row != cb[k].row || ca[k].value != cb[k].value) return false;
    }
    return true;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (!(f.target_ == g.source_)) fail(Errc::shape_mismatch, "composition shape mismatch");
    GradedMap out(f.source_, g.target_);
    for (int c = 0; c < f.source_.total_dim(); ++c) {
        std::map<int, CyclotomicScalar> acc;
        for (const auto& mid : f.cols_[c]) {
            for (const auto& top : g.cols_[mid.row]) {
                CyclotomicScalar term = top.value * mid.value;
                if (term.is_zero()) continue;
                auto it = acc.find(top.row);
                if (it == acc.end())
                    acc.emplace(top.row, std::move(term));
                else
                    it->second += term;
            }
        }
        for (auto& [r, v] : acc)
            if (!v.is_zero()) out.cols_[c].push_back({r, v});
    }
    return out;
}

GradedMap tensor_map(const GradedMap& f, const GradedMap& g) {
    GradedMap out(tensor_space(f.source_, g.source_), tensor_space(f.target_, g.target_));
    int g_src = g.source_.total_dim();
    int g_tgt = g.target_.total_dim();
    for (int cf = 0; cf < f.source_.total_dim(); ++cf) {
        if (f.cols_[cf].empty()) continue;
        for (int cg = 0; cg < g_src; ++cg) {
            if (g.cols_[cg].empty()) continue;
            auto& col = out.cols_[cf * g_src + cg];
            for (const auto& ef : f.cols_[cf])
                for (const auto& eg : g.cols_[cg])
                    col.push_back({ef.row * g_tgt + eg.row, ef.value * eg.value});
            // rows arrive sorted: f rows ascend outer, g rows ascend inner
        }
    }
    return out;
}

GradedMap tensor_many(std::span<const GradedMap> factors) {
    if (factors.empty()) fail(Errc::invalid_argument, "tensor_many needs at least one factor");
    GradedMap acc = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) acc = tensor_map(acc, factors[i]);
    return acc;
}

GradedMap tensor_many(std::initializer_list<GradedMap> factors) {
    return tensor_many(std::span<const GradedMap>(factors.begin(), factors.size()));
}

GradedMap operator+(const GradedMap& f, const GradedMap& g) {
    if (!(f.source_ == g.source_) || !(f.target_ == g.target_))
        fail(Errc::shape_mismatch, "sum of maps with different shapes");
    GradedMap out(f.source_, f.target_);
    for (int c = 0; c < f.source_.total_dim(); ++c) {
        std::map<int, CyclotomicScalar> acc;
        for (const auto& e : f.cols_[c]) acc.emplace(e.row, e.value);
        for (const auto& e : g.cols_[c]) {
            auto it = acc.find(e.row);
            if (it == acc.end())
                acc.emplace(e.row, e.value);
            else
                it->second += e.value;
        }
        for (auto& [r, v] : acc)
            if (!v.is_zero()) out.cols_[c].push_back({r, v});
    }
    return out;
}

GradedMap negate(const GradedMap& f) {
    return scalar_multiple(-CyclotomicScalar::one(f.field()), f);
}

GradedMap operator-(const GradedMap& f, const GradedMap& g) { return f + negate(g); }

GradedMap scalar_multiple(const CyclotomicScalar& s, const GradedMap& f) {
    GradedMap out(f.source_, f.target_);
    if (s.is_zero()) return out;
    for (int c = 0; c < f.source_.total_dim(); ++c)
        for (const auto& e : f.cols_[c]) {
            CyclotomicScalar v = s * e.value;
            if (!v.is_zero()) out.cols_[c].push_back({e.row, v});
        }
    return out;
}

GradedMap power_of(const GradedMap& f, int k) {
    if (!(f.source() == f.target())) fail(Errc::shape_mismatch, "power of a non-endomorphism");
    if (k < 0) fail(Errc::invalid_argument, "negative composition power");
    GradedMap acc = GradedMap::identity(f.source());
    for (int i = 0; i < k; ++i) acc = compose(f, acc);
    return acc;
}

bool is_degree_preserving(const GradedMap& f) {
    for (int c = 0; c < f.source().total_dim(); ++c)
        for (const auto& e : f.column(c))
            if (f.target().slot_degree(e.row) != f.source().slot_degree(c)) return false;
    return true;
}

void require_degree_preserving(const GradedMap& f, const std::string& what) {
    if (!is_degree_preserving(f))
        fail(Errc::shape_mismatch, what + " does not preserve the grading");
}

}  // namespace anyonic
