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

#include "anyonic/linalg.hpp"

#include <algorithm>

namespace anyonic {

ColumnSpan::ColumnSpan(GradedSpace ambient, bool track_coordinates)
    : ambient_(std::move(ambient)), track_(track_coordinates) {}

int ColumnSpan::find_lead(const std::vector<CyclotomicScalar>& v) const {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

bool ColumnSpan::insert(const std::vector<CyclotomicScalar>& v) {
    if (static_cast<int>(v.size()) != ambient_.total_dim())
        fail(Errc::shape_mismatch, "vector length does not match the ambient dimension");
    std::vector<CyclotomicScalar> r = v;
    std::vector<CyclotomicScalar> coord;
    if (track_)
        coord.assign(rank() + 1, CyclotomicScalar::zero(ambient_.field()));

    while (true) {
        int lead = find_lead(r);
        if (lead < 0) return false;  // dependent; coordinates() reconstructs combos on demand
        const Piece* hit = nullptr;
        for (const auto& piece : echelon_)
            if (piece.lead == lead) {
                hit = &piece;
                break;
            }
        if (hit == nullptr) {
            // new pivot: normalize and store
            CyclotomicScalar inv = r[lead].inverse();
            Piece piece;
            piece.lead = lead;
            piece.vec.reserve(r.size());
            for (const auto& x : r) piece.vec.push_back(x * inv);
            if (track_) {
                coord.back() = CyclotomicScalar::one(ambient_.field());
                for (auto& c : coord) c = c * inv;
                piece.coord = std::move(coord);
            }
            echelon_.push_back(std::move(piece));
            leads_.push_back(lead);
            return true;
        }
        CyclotomicScalar factor = r[lead];
        for (size_t i = lead; i < r.size(); ++i) r[i] -= factor * hit->vec[i];
        if (track_) {
            for (size_t k = 0; k < hit->coord.size(); ++k) coord[k] -= factor * hit->coord[k];
        }
    }
}

std::vector<CyclotomicScalar> ColumnSpan::reduce(const std::vector<CyclotomicScalar>& v) const {
    std::vector<CyclotomicScalar> r = v;
    while (true) {
        int lead = find_lead(r);
        if (lead < 0) return r;
        const Piece* hit = nullptr;
        for (const auto& piece : echelon_)
            if (piece.lead == lead) {
                hit = &piece;
                break;
            }
        if (hit == nullptr) return r;
        CyclotomicScalar factor = r[lead];
        for (size_t i = lead; i < r.size(); ++i) r[i] -= factor * hit->vec[i];
    }
}

bool ColumnSpan::contains(const std::vector<CyclotomicScalar>& v) const {
    return find_lead(reduce(v)) < 0;
}

std::optional<std::vector<CyclotomicScalar>> ColumnSpan::coordinates(
    const std::vector<CyclotomicScalar>& v) const {
    if (!track_) fail(Errc::invalid_argument, "coordinates need a tracking span");
    std::vector<CyclotomicScalar> r = v;
    std::vector<CyclotomicScalar> coord(rank(), CyclotomicScalar::zero(ambient_.field()));
    while (true) {
        int lead = find_lead(r);
        if (lead < 0) break;
        const Piece* hit = nullptr;
        for (const auto& piece : echelon_)
            if (piece.lead == lead) {
                hit = &piece;
                break;
            }
        if (hit == nullptr) return std::nullopt;
        CyclotomicScalar factor = r[lead];
        for (size_t i = lead; i < r.size(); ++i) r[i] -= factor * hit->vec[i];
        for (size_t k = 0; k < hit->coord.size(); ++k) coord[k] += factor * hit->coord[k];
    }
    return coord;
}

int rank(const GradedMap& f) {
    ColumnSpan span(f.target());
    for (int c = 0; c < f.source().total_dim(); ++c) span.insert(f.dense_column(c));
    return span.rank();
}

KernelResult kernel(const GradedMap& f) {
    // Feed columns left to right; whenever a column is dependent, the
    // tracked combination of earlier independent columns is a kernel vector.
    ColumnSpan span(f.target(), /*track=*/true);
    std::vector<int> independent;  // source columns that entered the span
    std::vector<std::vector<CyclotomicScalar>> basis;
    std::vector<int> degrees;
    const FieldPtr& field = f.field();
    for (int c = 0; c < f.source().total_dim(); ++c) {
        std::vector<CyclotomicScalar> col = f.dense_column(c);
        if (span.insert(col)) {
            independent.push_back(c);
            continue;
        }
        auto coords = span.coordinates(col);
        std::vector<CyclotomicScalar> k(f.source().total_dim(), CyclotomicScalar::zero(field));
        k[c] = CyclotomicScalar::one(field);
        if (coords) {
            for (size_t i = 0; i < coords->size(); ++i) k[independent[i]] -= (*coords)[i];
        }
        degrees.push_back(f.source().slot_degree(c));
        basis.push_back(std::move(k));
    }
    GradedSpace space = GradedSpace::from_slot_degrees(field, degrees);
    std::vector<std::tuple<int, int, CyclotomicScalar>> entries;
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t r = 0; r < basis[j].size(); ++r)
            if (!basis[j][r].is_zero()) entries.emplace_back(static_cast<int>(r), static_cast<int>(j), basis[j][r]);
    return {space, GradedMap::from_triplets(space, f.source(), entries)};
}

ImageResult image(const GradedMap& f) {
    ColumnSpan span(f.target());
    std::vector<int> pivots;
    for (int c = 0; c < f.source().total_dim(); ++c)
        if (span.insert(f.dense_column(c))) pivots.push_back(c);
    std::vector<int> degrees;
    degrees.reserve(pivots.size());
    for (int c : pivots) degrees.push_back(f.source().slot_degree(c));
    GradedSpace space = GradedSpace::from_slot_degrees(f.field(), degrees);
    std::vector<std::tuple<int, int, CyclotomicScalar>> entries;
    for (size_t j = 0; j < pivots.size(); ++j)
        for (const auto& e : f.column(pivots[j])) entries.emplace_back(e.row, static_cast<int>(j), e.value);
    return {space, GradedMap::from_triplets(space, f.target(), entries)};
}

QuotientResult cokernel(const GradedMap& f) {
    const GradedSpace& target = f.target();
    const FieldPtr& field = f.field();
    ColumnSpan relations(target);
    for (int c = 0; c < f.source().total_dim(); ++c) relations.insert(f.dense_column(c));

    std::vector<bool> is_lead(target.total_dim(), false);
    for (int lead : relations.leads()) is_lead[lead] = true;
    std::vector<int> free_slots;
    std::vector<int> degrees;
    for (int s = 0; s < target.total_dim(); ++s)
        if (!is_lead[s]) {
            free_slots.push_back(s);
            degrees.push_back(target.slot_degree(s));
        }
    GradedSpace space = GradedSpace::from_slot_degrees(field, degrees);

    std::vector<std::tuple<int, int, CyclotomicScalar>> proj_entries;
    for (int c = 0; c < target.total_dim(); ++c) {
        std::vector<CyclotomicScalar> e(target.total_dim(), CyclotomicScalar::zero(field));
        e[c] = CyclotomicScalar::one(field);
        std::vector<CyclotomicScalar> r = relations.reduce(e);
        for (size_t q = 0; q < free_slots.size(); ++q)
            if (!r[free_slots[q]].is_zero()) proj_entries.emplace_back(static_cast<int>(q), c, r[free_slots[q]]);
    }
    GradedMap projection = GradedMap::from_triplets(target, space, proj_entries);

    std::vector<std::tuple<int, int, CyclotomicScalar>> sect_entries;
    for (size_t q = 0; q < free_slots.size(); ++q)
        sect_entries.emplace_back(free_slots[q], static_cast<int>(q), CyclotomicScalar::one(field));
    GradedMap section = GradedMap::from_triplets(space, target, sect_entries);

    return {space, std::move(projection), std::move(section), relations.rank(), std::move(relations)};
}

GradedMap solve_through(const GradedMap& inclusion, const GradedMap& f) {
    if (!(inclusion.target() == f.target()))
        fail(Errc::shape_mismatch, "solve_through targets differ");
    ColumnSpan span(inclusion.target(), /*track=*/true);
    for (int c = 0; c < inclusion.source().total_dim(); ++c) {
        if (!span.insert(inclusion.dense_column(c)))
            fail(Errc::precondition, "inclusion columns are dependent");
    }
    std::vector<std::tuple<int, int, CyclotomicScalar>> entries;
    for (int c = 0; c < f.source().total_dim(); ++c) {
        auto coords = span.coordinates(f.dense_column(c));
        if (!coords)
            fail(Errc::precondition,
                 "column " + std::to_string(c) + " is not contained in the subspace");
        for (size_t r = 0; r < coords->size(); ++r)
            if (!(*coords)[r].is_zero()) entries.emplace_back(static_cast<int>(r), c, (*coords)[r]);
    }
    // the result can cross degrees when the inclusion does (change of basis)
    return GradedMap::from_triplets_any(f.source(), inclusion.source(), entries);
}

}  // namespace anyonic
