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

#include "anyonic/rational.hpp"

#include <cctype>

#include "anyonic/error.hpp"

namespace anyonic {

Rational rat(long num, long den) {
    if (den == 0) fail(Errc::division_by_zero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(Errc::parse, "empty rational literal");
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
            fail(Errc::parse, "malformed rational literal '" + text + "'");
    }
    mpq_t tmp;
    mpq_init(tmp);
    if (mpq_set_str(tmp, text.c_str(), 10) != 0) {
        mpq_clear(tmp);
        fail(Errc::parse, "malformed rational literal '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(tmp)) == 0) {
        mpq_clear(tmp);
        fail(Errc::parse, "zero denominator in rational literal '" + text + "'");
    }
    mpq_canonicalize(tmp);
    Rational out(tmp);
    mpq_clear(tmp);
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace anyonic
