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

#ifndef ANYONIC_RATIONAL_HPP
#define ANYONIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace anyonic {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (gcd(|num|, den) = 1, den > 0) provided construction goes through
// the helpers below.
using Rational = mpq_class;

/// num/den as a canonical Rational. Throws on den == 0.
Rational rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (base 10). Throws Error(Errc::parse) on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical textual form: "p" or "p/q".
std::string to_string(const Rational& q);

}  // namespace anyonic

#endif
