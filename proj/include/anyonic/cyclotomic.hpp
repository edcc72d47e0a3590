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

#ifndef ANYONIC_CYCLOTOMIC_HPP
#define ANYONIC_CYCLOTOMIC_HPP

#include <memory>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace anyonic {

/// Coefficients of the n-th cyclotomic polynomial, low degree first,
/// monic. Computed by exact division of x^n - 1 by the product of all
/// lower cyclotomic polynomials at divisors of n.
std::vector<Rational> cyclotomic_polynomial(int n);

/**
 * The cyclotomic field Q(zeta_n), zeta_n a primitive n-th root of unity.
 * Elements are represented in the power basis 1, zeta, ..., zeta^(phi(n)-1)
 * modulo the n-th cyclotomic polynomial, so equality of representations is
 * equality of field elements. Instances are interned: get(n) always returns
 * the same object for the same n.
 */
class CyclotomicField {
   public:
    static std::shared_ptr<const CyclotomicField> get(int n);

    int order() const { return n_; }    // n: root order and grading modulus
    int degree() const { return degree_; }  // phi(n)
    const std::vector<Rational>& modulus() const { return phi_; }

    /// x^j reduced mod Phi_n, for 0 <= j <= reduction_limit().
    const std::vector<Rational>& power_mod(int j) const;
    int reduction_limit() const { return static_cast<int>(xpow_.size()) - 1; }

   private:
    explicit CyclotomicField(int n);

    int n_;
    int degree_;
    std::vector<Rational> phi_;
    std::vector<std::vector<Rational>> xpow_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/**
 * An element of Q(zeta_n) in canonical (fully reduced) power-basis form.
 * Immutable value type; all arithmetic is exact. Mixing elements of
 * different fields raises Error(Errc::field_mismatch).
 */
class CyclotomicScalar {
   public:
    static CyclotomicScalar zero(const FieldPtr& field);
    static CyclotomicScalar one(const FieldPtr& field);
    static CyclotomicScalar from_rational(const FieldPtr& field, const Rational& value);
    /// Reduces an arbitrary-degree polynomial in zeta mod Phi_n.
    static CyclotomicScalar from_coeffs(const FieldPtr& field, std::vector<Rational> poly);
    /// zeta_n^k (k arbitrary, reduced mod n).
    static CyclotomicScalar zeta_power(const FieldPtr& field, long k);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant coefficient; only meaningful checks should follow is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    CyclotomicScalar operator-() const;
    CyclotomicScalar& operator+=(const CyclotomicScalar& rhs);
    CyclotomicScalar& operator-=(const CyclotomicScalar& rhs);
    CyclotomicScalar& operator*=(const CyclotomicScalar& rhs);
    friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
    friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
    friend CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar& b) { return a *= b; }
    CyclotomicScalar operator*(const Rational& r) const;

    /// Multiplicative inverse via extended gcd with Phi_n.
    /// Throws Error(Errc::division_by_zero) on zero.
    CyclotomicScalar inverse() const;

    friend bool operator==(const CyclotomicScalar& a, const CyclotomicScalar& b);
    friend bool operator!=(const CyclotomicScalar& a, const CyclotomicScalar& b) { return !(a == b); }

    /// Human-readable polynomial form in the variable z, e.g. "1-1/2z^2".
    std::string str() const;

   private:
    CyclotomicScalar(FieldPtr field, std::vector<Rational> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

/// (1/n) * sum_{a=0..n-1} zeta^(-a*b). Exactly 1 when b == 0 mod n and
/// exactly 0 otherwise; requires 0 <= b < n.
CyclotomicScalar root_sum_check(const FieldPtr& field, long b);

}  // namespace anyonic

#endif
