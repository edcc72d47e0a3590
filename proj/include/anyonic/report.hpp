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

#ifndef ANYONIC_REPORT_HPP
#define ANYONIC_REPORT_HPP

#include <string>
#include <vector>

namespace anyonic {

class GradedMap;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass; first offending basis column otherwise
};

/// Ordered list of exact checks. Check order is fixed by the producer, so
/// serialized reports are byte-stable across runs.
struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

/// Compares two maps of equal shape; on mismatch records the first differing
/// basis column with both images rendered as scalar tuples.
void check_equal(Report& report, const std::string& name, const GradedMap& lhs, const GradedMap& rhs);

}  // namespace anyonic

#endif
