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

#ifndef ANYONIC_ERROR_HPP
#define ANYONIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace anyonic {

enum class Errc {
    invalid_argument = 1,
    parse = 2,
    field_mismatch = 3,
    shape_mismatch = 4,
    division_by_zero = 5,
    precondition = 6,
    cap_exceeded = 7,
    level_bound = 8,
};

/// All structured failures raised by the library carry one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace anyonic

#endif
