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

#include "anyonic/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace anyonic {

namespace {

// Dense univariate polynomials over Q, low degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    strip(a);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    strip(out);
    return out;
}

Poly poly_scale(Poly a, const Rational& s) {
    for (auto& c : a) c *= s;
    strip(a);
    return a;
}

// quotient, remainder with divisor != 0
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    if (den.empty()) fail(Errc::division_by_zero, "polynomial division by zero");
    Poly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        strip(num);
    }
    strip(quot);
    return {quot, num};
}

Poly poly_exact_div(Poly num, const Poly& den) {
    auto [q, r] = poly_divmod(std::move(num), den);
    if (!r.empty()) fail(Errc::invalid_argument, "polynomial division was not exact");
    return q;
}

Poly x_pow_minus_one(int n) {
    Poly p(n + 1, Rational(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

int euler_phi(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int n) {
    if (n < 1) fail(Errc::invalid_argument, "cyclotomic polynomial needs n >= 1");
    std::map<int, Poly> phi;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Poly num = x_pow_minus_one(d);
        for (const auto& [e, p] : phi)
            if (d % e == 0) num = poly_exact_div(std::move(num), p);
        phi[d] = std::move(num);
    }
    return phi[n];
}

CyclotomicField::CyclotomicField(int n) : n_(n) {
    phi_ = cyclotomic_polynomial(n);
    degree_ = static_cast<int>(phi_.size()) - 1;
    if (degree_ != euler_phi(n))
        fail(Errc::invalid_argument, "cyclotomic polynomial degree mismatch");

    // x^j mod Phi_n for every exponent multiplication or zeta powers can
    // produce before reduction.
    int limit = std::max(n - 1, 2 * degree_ - 2);
    limit = std::max(limit, 0);
    xpow_.reserve(limit + 1);
    std::vector<Rational> cur(degree_, Rational(0));
    if (degree_ > 0) cur[0] = 1;
    xpow_.push_back(cur);
    for (int j = 1; j <= limit; ++j) {
        std::vector<Rational> next(degree_, Rational(0));
        for (int i = 0; i + 1 < degree_; ++i) next[i + 1] = cur[i];
        const Rational& top = cur[degree_ - 1];
        if (top != 0) {
            // subtract top * (Phi_n - x^degree), i.e. fold the overflow back
            for (int i = 0; i < degree_; ++i) next[i] -= top * phi_[i];
        }
        xpow_.push_back(next);
        cur = std::move(next);
    }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int n) {
    if (n < 1) fail(Errc::invalid_argument, "cyclotomic field needs n >= 1");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto field = std::shared_ptr<const CyclotomicField>(new CyclotomicField(n));
    cache[n] = field;
    return field;
}

const std::vector<Rational>& CyclotomicField::power_mod(int j) const {
    if (j < 0 || j > reduction_limit())
        fail(Errc::invalid_argument, "power_mod exponent out of range");
    return xpow_[j];
}

namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a->order() != b->order())
        fail(Errc::field_mismatch, "scalars live in different cyclotomic fields");
}

}  // namespace

CyclotomicScalar CyclotomicScalar::zero(const FieldPtr& field) {
    return {field, std::vector<Rational>(field->degree(), Rational(0))};
}

CyclotomicScalar CyclotomicScalar::one(const FieldPtr& field) {
    return from_rational(field, Rational(1));
}

CyclotomicScalar CyclotomicScalar::from_rational(const FieldPtr& field, const Rational& value) {
    std::vector<Rational> coeffs(field->degree(), Rational(0));
    coeffs[0] = value;
    return {field, std::move(coeffs)};
}

CyclotomicScalar CyclotomicScalar::from_coeffs(const FieldPtr& field, std::vector<Rational> poly) {
    int deg = field->degree();
    std::vector<Rational> out(deg, Rational(0));
    for (size_t j = 0; j < poly.size(); ++j) {
        if (poly[j] == 0) continue;
        if (static_cast<int>(j) < deg) {
            out[j] += poly[j];
        } else {
            const auto& row = field->power_mod(static_cast<int>(j));
            for (int i = 0; i < deg; ++i) out[i] += poly[j] * row[i];
        }
    }
    return {field, std::move(out)};
}

CyclotomicScalar CyclotomicScalar::zeta_power(const FieldPtr& field, long k) {
    long n = field->order();
    long r = ((k % n) + n) % n;
    return {field, field->power_mod(static_cast<int>(r))};
}

bool CyclotomicScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicScalar::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CyclotomicScalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CyclotomicScalar CyclotomicScalar::operator-() const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c = -c;
    return {field_, std::move(out)};
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& rhs) {
    require_same_field(field_, rhs.field_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& rhs) {
    require_same_field(field_, rhs.field_);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& rhs) {
    require_same_field(field_, rhs.field_);
    int deg = field_->degree();
    std::vector<Rational> conv(2 * deg - 1, Rational(0));
    for (int i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Rational> out(deg, Rational(0));
    for (int j = 0; j < 2 * deg - 1; ++j) {
        if (conv[j] == 0) continue;
        if (j < deg) {
            out[j] += conv[j];
        } else {
            const auto& row = field_->power_mod(j);
            for (int i = 0; i < deg; ++i) out[i] += conv[j] * row[i];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

CyclotomicScalar CyclotomicScalar::operator*(const Rational& r) const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c *= r;
    return {field_, std::move(out)};
}

CyclotomicScalar CyclotomicScalar::inverse() const {
    if (is_zero()) fail(Errc::division_by_zero, "inverse of zero scalar");
    // Extended Euclid in Q[x] against the (irreducible) modulus:
    // t * self = gcd (mod Phi_n), gcd a nonzero constant.
    Poly r0 = field_->modulus();
    Poly r1(coeffs_);
    strip(r1);
    Poly t0;                 // 0
    Poly t1{Rational(1)};    // 1
    while (!r1.empty()) {
        auto [q, rem] = poly_divmod(r0, r1);
        Poly tnext = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tnext);
    }
    if (r0.size() != 1)
        fail(Errc::division_by_zero, "scalar shares a factor with the modulus");
    return from_coeffs(field_, poly_scale(std::move(t0), Rational(1) / r0[0]));
}

bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    if (a.field_->order() != b.field_->order()) return false;
    return a.coeffs_ == b.coeffs_;
}

std::string CyclotomicScalar::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Rational mag = abs(c);
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i >= 1) {
            out << "z";
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

CyclotomicScalar root_sum_check(const FieldPtr& field, long b) {
    long n = field->order();
    if (b < 0 || b >= n) fail(Errc::invalid_argument, "root_sum_check needs 0 <= b < n");
    CyclotomicScalar acc = CyclotomicScalar::zero(field);
    for (long a = 0; a < n; ++a) acc += CyclotomicScalar::zeta_power(field, -a * b);
    return acc * rat(1, n);
}

}  // namespace anyonic
