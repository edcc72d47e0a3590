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

#include "anyonic/graded.hpp"

#include <algorithm>
#include <numeric>

namespace anyonic {

struct GradedSpace::Data {
    FieldPtr field;
    std::vector<int> dims;           // dims[d] = dim of degree-d component
    std::vector<int> slot_degrees;   // degree per basis slot
    std::vector<int> index_within;   // position among slots of the same degree
};

std::shared_ptr<const GradedSpace::Data> GradedSpace::make(const FieldPtr& field,
                                                           std::vector<int> slot_degrees) {
    auto data = std::make_shared<GradedSpace::Data>();
    data->field = field;
    int n = field->order();
    data->dims.assign(n, 0);
    data->index_within.resize(slot_degrees.size());
    for (size_t s = 0; s < slot_degrees.size(); ++s) {
        int d = slot_degrees[s];
        if (d < 0 || d >= n) fail(Errc::invalid_argument, "basis degree out of range");
        data->index_within[s] = data->dims[d]++;
    }
    data->slot_degrees = std::move(slot_degrees);
    return data;
}

GradedSpace::GradedSpace(const FieldPtr& field, std::vector<int> dims) : data_(nullptr) {
    if (static_cast<int>(dims.size()) != field->order())
        fail(Errc::invalid_argument, "dimension vector length must equal the grading modulus");
    std::vector<int> slots;
    for (int d = 0; d < static_cast<int>(dims.size()); ++d) {
        if (dims[d] < 0) fail(Errc::invalid_argument, "negative dimension");
        slots.insert(slots.end(), dims[d], d);
    }
    data_ = make(field, std::move(slots));
}

GradedSpace GradedSpace::from_slot_degrees(const FieldPtr& field, std::vector<int> slot_degrees) {
    return GradedSpace(make(field, std::move(slot_degrees)));
}

GradedSpace GradedSpace::unit(const FieldPtr& field) {
    std::vector<int> dims(field->order(), 0);
    dims[0] = 1;
    return GradedSpace(field, std::move(dims));
}

const FieldPtr& GradedSpace::field() const { return data_->field; }
int GradedSpace::modulus() const { return data_->field->order(); }
int GradedSpace::total_dim() const { return static_cast<int>(data_->slot_degrees.size()); }
const std::vector<int>& GradedSpace::dims() const { return data_->dims; }
const std::vector<int>& GradedSpace::slot_degrees() const { return data_->slot_degrees; }

int GradedSpace::slot_degree(int slot) const {
    if (slot < 0 || slot >= total_dim()) fail(Errc::invalid_argument, "basis slot out of range");
    return data_->slot_degrees[slot];
}

BasisVector GradedSpace::basis_vector(int slot) const {
    if (slot < 0 || slot >= total_dim()) fail(Errc::invalid_argument, "basis slot out of range");
    return {data_->slot_degrees[slot], data_->index_within[slot]};
}

int GradedSpace::slot(const BasisVector& bv) const {
    if (bv.degree < 0 || bv.degree >= modulus() || bv.index < 0 || bv.index >= data_->dims[bv.degree])
        fail(Errc::invalid_argument, "basis vector out of range");
    for (int s = 0; s < total_dim(); ++s)
        if (data_->slot_degrees[s] == bv.degree && data_->index_within[s] == bv.index) return s;
    fail(Errc::invalid_argument, "basis vector not found");
}

bool operator==(const GradedSpace& a, const GradedSpace& b) {
    if (a.data_ == b.data_) return true;
    return a.modulus() == b.modulus() && a.data_->slot_degrees == b.data_->slot_degrees;
}

GradedSpace tensor_space(const GradedSpace& v, const GradedSpace& w) {
    if (v.modulus() != w.modulus())
        fail(Errc::field_mismatch, "tensor product of spaces over different fields");
    int n = v.modulus();
    std::vector<int> slots;
    slots.reserve(static_cast<size_t>(v.total_dim()) * w.total_dim());
    for (int i = 0; i < v.total_dim(); ++i)
        for (int j = 0; j < w.total_dim(); ++j)
            slots.push_back((v.slot_degree(i) + w.slot_degree(j)) % n);
    return GradedSpace::from_slot_degrees(v.field(), std::move(slots));
}

GradedSpace tensor_power(const GradedSpace& v, int k) {
    if (k < 0) fail(Errc::invalid_argument, "negative tensor power");
    GradedSpace acc = GradedSpace::unit(v.field());
    for (int i = 0; i < k; ++i) acc = tensor_space(acc, v);
    return acc;
}

TensorIndexer::TensorIndexer(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
    total_ = 1;
    for (int d : dims_) {
        if (d < 0) fail(Errc::invalid_argument, "negative factor dimension");
        total_ *= d;
    }
}

int TensorIndexer::flatten(std::span<const int> multi) const {
    if (multi.size() != dims_.size()) fail(Errc::invalid_argument, "multi-index arity mismatch");
    int slot = 0;
    for (size_t i = 0; i < dims_.size(); ++i) {
        if (multi[i] < 0 || multi[i] >= dims_[i]) fail(Errc::invalid_argument, "multi-index out of range");
        slot = slot * dims_[i] + multi[i];
    }
    return slot;
}

std::vector<int> TensorIndexer::unflatten(int slot) const {
    if (slot < 0 || slot >= total_) fail(Errc::invalid_argument, "flat index out of range");
    std::vector<int> multi(dims_.size(), 0);
    for (size_t i = dims_.size(); i-- > 0;) {
        multi[i] = slot % dims_[i];
        slot /= dims_[i];
    }
    return multi;
}

}  // namespace anyonic
