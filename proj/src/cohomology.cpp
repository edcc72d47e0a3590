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

#include "anyonic/cohomology.hpp"

namespace anyonic {

GradedMap hochschild_differential(const CocyclicModule& cm, int n) {
    if (n < 1 || n > cm.level()) fail(Errc::level_bound, "differential level out of range");
    GradedMap acc = cm.faces[n][0];
    bool minus = true;
    for (int i = 1; i <= n; ++i) {
        acc = minus ? acc - cm.faces[n][i] : acc + cm.faces[n][i];
        minus = !minus;
    }
    return acc;
}

SubcomplexLevel cyclic_subcomplex(const CocyclicModule& cm, int n) {
    if (n < 0 || n > cm.level()) fail(Errc::level_bound, "subcomplex level out of range");
    if (para_defect(cm, n) != 0)
        fail(Errc::precondition,
             "cyclic cohomology is undefined: tau^(n+1) != id at level " + std::to_string(n));
    GradedMap lambda = cm.cyclic[n];
    if (n % 2 == 1) lambda = negate(lambda);
    KernelResult ker = kernel(GradedMap::identity(cm.levels[n]) - lambda);
    return {ker.space, ker.inclusion};
}

namespace {

GradedSpace zero_space(const FieldPtr& field) {
    return GradedSpace::from_slot_degrees(field, std::vector<int>{});
}

}  // namespace

CochainComplex hochschild_complex(const CocyclicModule& cm) {
    CochainComplex out;
    out.spaces = cm.levels;
    // a zero "b_0" from the zero space keeps the indexing uniform
    out.differentials.emplace_back(zero_space(cm.levels[0].field()), cm.levels[0]);
    for (int n = 1; n <= cm.level(); ++n) out.differentials.push_back(hochschild_differential(cm, n));
    for (int n = 1; n + 1 <= cm.level(); ++n) {
        if (!compose(out.differentials[n + 1], out.differentials[n]).is_zero())
            fail(Errc::precondition, "differential does not square to zero at level " + std::to_string(n));
    }
    return out;
}

CochainComplex lambda_complex(const CocyclicModule& cm) {
    CochainComplex out;
    std::vector<GradedMap> inclusions;
    for (int n = 0; n <= cm.level(); ++n) {
        SubcomplexLevel sub = cyclic_subcomplex(cm, n);
        out.spaces.push_back(sub.space);
        inclusions.push_back(sub.inclusion);
    }
    out.differentials.emplace_back(zero_space(cm.levels[0].field()), out.spaces[0]);
    for (int n = 1; n <= cm.level(); ++n) {
        // closure of the fixed subspaces under b, then corestriction
        GradedMap restricted = compose(hochschild_differential(cm, n), inclusions[n - 1]);
        out.differentials.push_back(solve_through(inclusions[n], restricted));
    }
    for (int n = 1; n + 1 <= cm.level(); ++n) {
        if (!compose(out.differentials[n + 1], out.differentials[n]).is_zero())
            fail(Errc::precondition,
                 "restricted differential does not square to zero at level " + std::to_string(n));
    }
    return out;
}

CohomologyReport hc_dimensions(const CocyclicModule& cm, int up_to) {
    if (up_to < 0) fail(Errc::invalid_argument, "negative degree bound");
    if (up_to > cm.level() - 1)
        fail(Errc::level_bound, "degree " + std::to_string(up_to) + " needs data to level " +
                                    std::to_string(up_to + 1) + " but only " +
                                    std::to_string(cm.level()) + " is available");

    CochainComplex full = hochschild_complex(cm);
    CochainComplex lambda = lambda_complex(cm);

    CohomologyReport report;
    report.level = cm.level();
    for (int n = 0; n <= up_to; ++n) {
        int rank_in_full = rank(full.differentials[n]);
        int rank_out_full = rank(full.differentials[n + 1]);
        int rank_in_lambda = rank(lambda.differentials[n]);
        int rank_out_lambda = rank(lambda.differentials[n + 1]);
        CohomologyRow row;
        row.degree = n;
        row.dim_full = cm.levels[n].total_dim();
        row.dim_lambda = lambda.spaces[n].total_dim();
        row.hh = row.dim_full - rank_out_full - rank_in_full;
        row.hc = row.dim_lambda - rank_out_lambda - rank_in_lambda;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace anyonic
