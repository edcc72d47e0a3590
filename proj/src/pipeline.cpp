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

#include "anyonic/pipeline.hpp"

#include <algorithm>

#include "anyonic/cocyclic.hpp"

namespace anyonic {

PipelineResult run_pipeline(int n, int level, long cap) {
    if (n < 1) fail(Errc::invalid_argument, "pipeline needs n >= 1");
    if (level < 0) fail(Errc::invalid_argument, "pipeline needs level >= 0");
    PipelineResult out;
    out.n = n;
    out.level = level;

    OrdinaryHopf h = czn_group_algebra(n);
    QuasitriangularElement r = czn_r_matrix(n);
    out.quasitriangular = verify_quasitriangular(h, r);

    BraidedHopfAlgebra hb = transmute(h, r);
    check_equal(out.transmutation, "coproduct_unchanged", hb.comul, h.comul);
    check_equal(out.transmutation, "antipode_unchanged", hb.antipode, h.antipode);
    bool degree_zero = true;
    for (int s = 0; s < hb.space.total_dim(); ++s)
        if (hb.space.slot_degree(s) != 0) degree_zero = false;
    out.transmutation.add("degree_zero_concentrated", degree_zero,
                          degree_zero ? "" : "transmuted algebra has nonzero degrees");
    GradedMap psi = braiding(hb.space, hb.space, hb.braid);
    check_equal(out.transmutation, "braiding_is_flip", psi, flip_map(hb.space, hb.space));
    check_equal(out.transmutation, "braiding_squares_to_id",
                compose(braiding(hb.space, hb.space, hb.braid), psi),
                GradedMap::identity(tensor_space(hb.space, hb.space)));

    BuildOptions options;
    options.cap = cap;
    // a degenerate level-0 request still tabulates HC^0, which needs level-1 data
    int build_level = std::max(level, 1);
    CocyclicModule cm = build_cm_cocyclic(hb, trivial_pair(hb), build_level, options);
    out.cocyclic = cm.build_checks;
    out.cocyclic.append(verify_cocyclic_identities(cm));
    for (int k = 0; k <= build_level; ++k) {
        int defect = para_defect(cm, k);
        out.cocyclic.add("para_defect(n=" + std::to_string(k) + ")", defect == 0,
                         defect == 0 ? "" : "defect rank " + std::to_string(defect));
    }

    out.cohomology = hc_dimensions(cm, build_level - 1);

    out.all_pass = out.quasitriangular.all_pass() && out.transmutation.all_pass() &&
                   out.cocyclic.all_pass();
    return out;
}

}  // namespace anyonic
