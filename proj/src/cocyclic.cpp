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

#include "anyonic/cocyclic.hpp"

#include <algorithm>
#include <string>

namespace anyonic {

namespace {

GradedMap id_power(const GradedSpace& h, int k) { return GradedMap::identity(tensor_power(h, k)); }

std::string tag(const char* name, int n, int i = -1, int j = -1) {
    std::string out = std::string(name) + "(n=" + std::to_string(n);
    if (i >= 0) out += ",i=" + std::to_string(i);
    if (j >= 0) out += ",j=" + std::to_string(j);
    out += ")";
    return out;
}

// Level dimensions grow exponentially, so validate the top dimension by pure
// arithmetic before any space is materialized. base^exponent times scale,
// with dim and dim^2 both within the cap.
void enforce_cap(long scale, long base, int exponent, long cap) {
    if (cap < 1) fail(Errc::invalid_argument, "cap must be positive");
    long dim = scale;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && dim > cap / base) {
            dim = cap + 1;
            break;
        }
        dim *= base;
    }
    bool square_over = dim > 0 && dim > cap / dim;
    if (dim > cap || square_over)
        fail(Errc::cap_exceeded, "level spaces exceed the matrix-size cap (top dimension " +
                                     (dim > cap ? std::string("over ") + std::to_string(cap)
                                                : std::to_string(dim)) +
                                     ", cap " + std::to_string(cap) + " entries)");
}

void record_structure(Report& into, const Report& sub, const std::string& prefix, bool enforce) {
    for (const auto& c : sub.checks) {
        into.add(prefix + c.name, c.pass, c.witness);
        if (enforce && !c.pass)
            fail(Errc::precondition, "structure check failed: " + prefix + c.name);
    }
}

}  // namespace

CocyclicModule build_cm_cocyclic(const BraidedHopfAlgebra& h, const ModularPair& pair, int level,
                                 const BuildOptions& options) {
    if (level < 0) fail(Errc::invalid_argument, "negative level");
    CocyclicModule cm;

    record_structure(cm.build_checks, verify_hopf_axioms(h), "hopf_", options.enforce_valid);
    record_structure(cm.build_checks, verify_modular_pair(h, pair), "pair_", options.enforce_valid);
    SymmetryCheck sym = braid_symmetry_check(h.space, h.space, h.braid);
    cm.build_checks.add("hypothesis_psi_squared", sym.symmetric_pair,
                        sym.symmetric_pair ? "" : "the braiding on H (x) H does not square to the identity");

    enforce_cap(1, h.dim(), level, options.cap);
    for (int n = 0; n <= level; ++n) cm.levels.push_back(tensor_power(h.space, n));

    GradedMap twisted = twisted_antipode(h, pair);

    cm.faces.resize(level + 1);
    for (int n = 1; n <= level; ++n) {
        for (int i = 0; i <= n; ++i) {
            std::vector<GradedMap> parts;
            if (i == 0) {
                parts.push_back(h.unit);
                parts.push_back(id_power(h.space, n - 1));
            } else if (i == n) {
                parts.push_back(id_power(h.space, n - 1));
                parts.push_back(pair.grouplike);
            } else {
                parts.push_back(id_power(h.space, i - 1));
                parts.push_back(h.comul);
                parts.push_back(id_power(h.space, n - 1 - i));
            }
            cm.faces[n].push_back(tensor_many(parts));
        }
    }

    cm.degeneracies.resize(level);  // target levels 0..level-1
    for (int n = 0; n + 1 <= level; ++n) {
        for (int i = 0; i <= n; ++i) {
            std::vector<GradedMap> parts;
            parts.push_back(id_power(h.space, i));
            parts.push_back(h.counit);
            parts.push_back(id_power(h.space, n - i));
            cm.degeneracies[n].push_back(tensor_many(parts));
        }
    }

    cm.cyclic.push_back(GradedMap::identity(cm.levels[0]));
    for (int n = 1; n <= level; ++n) {
        GradedMap spread = compose(iterated_coproduct(h, n - 1), twisted);  // H -> H^n
        GradedMap prepare = tensor_many({spread, id_power(h.space, n - 1), pair.grouplike});
        cm.cyclic.push_back(compose(power_multiplication(h, n), prepare));
    }
    return cm;
}

Report verify_cocyclic_identities(const CocyclicModule& cm) {
    Report report;
    int top = cm.level();

    // faces against faces: delta_j delta_i = delta_i delta_{j-1} for i < j
    for (int n = 2; n <= top; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                check_equal(report, tag("delta_delta", n, i, j),
                            compose(cm.faces[n][j], cm.faces[n - 1][i]),
                            compose(cm.faces[n][i], cm.faces[n - 1][j - 1]));

    // degeneracies against degeneracies: sigma_j sigma_i = sigma_i sigma_{j+1} for i <= j
    for (int n = 0; n + 2 <= top; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                check_equal(report, tag("sigma_sigma", n, i, j),
                            compose(cm.degeneracies[n][j], cm.degeneracies[n + 1][i]),
                            compose(cm.degeneracies[n][i], cm.degeneracies[n + 1][j + 1]));

    // mixed relations: sigma_j delta_i on C^n
    for (int n = 0; n + 1 <= top; ++n) {
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= n + 1; ++i) {
                GradedMap lhs = compose(cm.degeneracies[n][j], cm.faces[n + 1][i]);
                if (i == j || i == j + 1) {
                    check_equal(report, tag("sigma_delta_id", n, i, j), lhs,
                                GradedMap::identity(cm.levels[n]));
                } else if (i < j) {
                    check_equal(report, tag("sigma_delta", n, i, j), lhs,
                                compose(cm.faces[n][i], cm.degeneracies[n - 1][j - 1]));
                } else {
                    check_equal(report, tag("sigma_delta", n, i, j), lhs,
                                compose(cm.faces[n][i - 1], cm.degeneracies[n - 1][j]));
                }
            }
        }
    }

    // cyclic against faces: tau_n delta_i = delta_{i-1} tau_{n-1}, tau_n delta_0 = delta_n
    for (int n = 1; n <= top; ++n) {
        check_equal(report, tag("tau_delta0", n), compose(cm.cyclic[n], cm.faces[n][0]),
                    cm.faces[n][n]);
        for (int i = 1; i <= n; ++i)
            check_equal(report, tag("tau_delta", n, i),
                        compose(cm.cyclic[n], cm.faces[n][i]),
                        compose(cm.faces[n][i - 1], cm.cyclic[n - 1]));
    }

    // cyclic against degeneracies: tau_n sigma_i = sigma_{i-1} tau_{n+1},
    // tau_n sigma_0 = sigma_n tau_{n+1}^2
    for (int n = 0; n + 1 <= top; ++n) {
        check_equal(report, tag("tau_sigma0", n), compose(cm.cyclic[n], cm.degeneracies[n][0]),
                    compose(cm.degeneracies[n][n], power_of(cm.cyclic[n + 1], 2)));
        for (int i = 1; i <= n; ++i)
            check_equal(report, tag("tau_sigma", n, i),
                        compose(cm.cyclic[n], cm.degeneracies[n][i]),
                        compose(cm.degeneracies[n][i - 1], cm.cyclic[n + 1]));
    }

    // cyclicity: tau_n^(n+1) = id
    for (int n = 0; n <= top; ++n)
        check_equal(report, tag("tau_order", n), power_of(cm.cyclic[n], n + 1),
                    GradedMap::identity(cm.levels[n]));

    return report;
}

int para_defect(const CocyclicModule& cm, int n) {
    if (n < 0 || n > cm.level()) fail(Errc::level_bound, "para_defect level out of range");
    return rank(power_of(cm.cyclic[n], n + 1) - GradedMap::identity(cm.levels[n]));
}

TripleData reduction_triple(const BraidedHopfAlgebra& h) {
    GradedSpace unit = h.unit_object();
    GradedMap id_i = GradedMap::identity(unit);
    TripleData t{
        h,
        h.space,
        h.comul,
        h.counit,
        h.mul,  // H acts on itself by multiplication
        unit,
        h.counit,  // H (x) I = H -> I
        h.unit,    // I -> H = H (x) I
        std::nullopt,
    };
    return t;
}

Report verify_triple_data(const TripleData& t) {
    Report report;
    const BraidedHopfAlgebra& h = t.hopf;
    const GradedSpace& C = t.coalgebra;
    const GradedSpace& M = t.module;
    GradedMap id_c = GradedMap::identity(C);
    GradedMap id_m = GradedMap::identity(M);
    GradedMap id_h = GradedMap::identity(h.space);

    check_equal(report, "coalgebra_coassociativity",
                compose(tensor_map(t.comul_c, id_c), t.comul_c),
                compose(tensor_map(id_c, t.comul_c), t.comul_c));
    check_equal(report, "coalgebra_counit_left",
                compose(tensor_map(t.counit_c, id_c), t.comul_c), id_c);
    check_equal(report, "coalgebra_counit_right",
                compose(tensor_map(id_c, t.counit_c), t.comul_c), id_c);

    check_equal(report, "coalgebra_action_mul",
                compose(t.action_c, tensor_map(h.mul, id_c)),
                compose(t.action_c, tensor_map(id_h, t.action_c)));
    check_equal(report, "coalgebra_action_unit",
                compose(t.action_c, tensor_map(h.unit, id_c)), id_c);
    check_equal(report, "action_comul_compatible", compose(t.comul_c, t.action_c),
                compose(tensor_map(t.action_c, t.action_c),
                        compose(tensor_many({id_h, braiding(h.space, C, h.braid), id_c}),
                                tensor_map(h.comul, t.comul_c))));
    check_equal(report, "action_counit_compatible", compose(t.counit_c, t.action_c),
                tensor_map(h.counit, t.counit_c));

    check_equal(report, "module_action_mul",
                compose(t.action_m, tensor_map(h.mul, id_m)),
                compose(t.action_m, tensor_map(id_h, t.action_m)));
    check_equal(report, "module_action_unit",
                compose(t.action_m, tensor_map(h.unit, id_m)), id_m);
    check_equal(report, "coaction_counital",
                compose(tensor_map(h.counit, id_m), t.coaction_m), id_m);
    check_equal(report, "coaction_coassociative",
                compose(tensor_map(h.comul, id_m), t.coaction_m),
                compose(tensor_map(id_h, t.coaction_m), t.coaction_m));

    if (t.right_action_m) {
        check_equal(report, "balancing_action_mul",
                    compose(*t.right_action_m, tensor_map(*t.right_action_m, id_h)),
                    compose(*t.right_action_m, tensor_map(id_m, h.mul)));
        check_equal(report, "balancing_action_unit",
                    compose(*t.right_action_m, tensor_map(id_m, h.unit)), id_m);
    }

    SymmetryCheck hh = braid_symmetry_check(h.space, h.space, h.braid);
    SymmetryCheck hm = braid_symmetry_check(h.space, M, h.braid);
    SymmetryCheck hc = braid_symmetry_check(h.space, C, h.braid);
    SymmetryCheck mc = braid_symmetry_check(M, C, h.braid);
    report.add("hypothesis_psi_hh", hh.symmetric_pair);
    report.add("hypothesis_psi_hm", hm.symmetric_pair);
    report.add("hypothesis_psi_hc", hc.symmetric_pair);
    report.add("hypothesis_psi_mc", mc.symmetric_pair);
    return report;
}

namespace {

GradedMap balancing_right_action(const TripleData& t) {
    if (t.right_action_m) return *t.right_action_m;
    const BraidedHopfAlgebra& h = t.hopf;
    // m < a = S(a) > m: braid M past H, twist by the antipode, act
    return compose(t.action_m, compose(tensor_map(h.antipode, GradedMap::identity(t.module)),
                                       braiding(t.module, h.space, h.braid)));
}

/// Diagonal action of H on C^(x)k via iterated coproduct and braidings.
GradedMap diagonal_action(const TripleData& t, int k) {
    const BraidedHopfAlgebra& h = t.hopf;
    if (k < 1) fail(Errc::invalid_argument, "diagonal action needs k >= 1");
    if (k == 1) return t.action_c;
    GradedMap tail = diagonal_action(t, k - 1);
    GradedMap spread = tensor_map(h.comul, id_power(t.coalgebra, k));
    GradedMap braid_in = tensor_many({GradedMap::identity(h.space),
                                      braiding(h.space, t.coalgebra, h.braid),
                                      id_power(t.coalgebra, k - 1)});
    return compose(tensor_map(t.action_c, tail), compose(braid_in, spread));
}

}  // namespace

CocyclicModule build_triple_paracocyclic(const TripleData& t, int level, const BuildOptions& options) {
    if (level < 0) fail(Errc::invalid_argument, "negative level");
    const BraidedHopfAlgebra& h = t.hopf;
    const GradedSpace& C = t.coalgebra;
    const GradedSpace& M = t.module;
    GradedMap id_m = GradedMap::identity(M);

    CocyclicModule cm;
    record_structure(cm.build_checks, verify_triple_data(t), "triple_", false);
    if (options.enforce_valid) {
        for (const auto& c : cm.build_checks.checks)
            if (!c.pass && c.name.rfind("triple_hypothesis_", 0) != 0)
                fail(Errc::precondition, "structure check failed: " + c.name);
    }

    enforce_cap(std::max(M.total_dim(), 1), C.total_dim(), level + 1, options.cap);
    for (int n = 0; n <= level; ++n)
        cm.levels.push_back(tensor_space(M, tensor_power(C, n + 1)));

    auto rotate_first_c = [&](int n) {
        // 1_M (x) psi_{C, C^n}; for n = 0 this is the identity
        return tensor_map(id_m, braiding(C, tensor_power(C, n), h.braid));
    };
    auto act_on_first_c = [&](int n) {
        return tensor_many({id_m, t.action_c, id_power(C, n)});
    };
    GradedMap psi_hm = braiding(h.space, M, h.braid);

    cm.faces.resize(level + 1);
    for (int n = 1; n <= level; ++n) {
        for (int i = 0; i < n; ++i) {
            std::vector<GradedMap> parts;
            parts.push_back(id_m);
            parts.push_back(id_power(C, i));
            parts.push_back(t.comul_c);
            parts.push_back(id_power(C, n - 1 - i));
            cm.faces[n].push_back(tensor_many(parts));
        }
        GradedMap start = tensor_many({t.coaction_m, t.comul_c, id_power(C, n - 1)});
        GradedMap swap = tensor_map(psi_hm, id_power(C, n + 1));
        cm.faces[n].push_back(
            compose(rotate_first_c(n), compose(act_on_first_c(n), compose(swap, start))));
    }

    cm.degeneracies.resize(level);
    for (int n = 0; n + 1 <= level; ++n) {
        for (int i = 0; i <= n; ++i) {
            std::vector<GradedMap> parts;
            parts.push_back(id_m);
            parts.push_back(id_power(C, i + 1));
            parts.push_back(t.counit_c);
            parts.push_back(id_power(C, n - i));
            cm.degeneracies[n].push_back(tensor_many(parts));
        }
    }

    for (int n = 0; n <= level; ++n) {
        GradedMap start = tensor_map(t.coaction_m, id_power(C, n + 1));
        GradedMap swap = tensor_map(psi_hm, id_power(C, n + 1));
        cm.cyclic.push_back(
            compose(rotate_first_c(n), compose(act_on_first_c(n), compose(swap, start))));
    }
    return cm;
}

BalancedQuotient balanced_quotient(const TripleData& t, int n) {
    if (n < 0) fail(Errc::invalid_argument, "negative level");
    int k = n + 1;
    GradedMap bal = balancing_right_action(t);
    GradedMap diag = diagonal_action(t, k);
    GradedMap lhs = tensor_map(bal, id_power(t.coalgebra, k));
    GradedMap rhs = tensor_map(GradedMap::identity(t.module), diag);
    GradedMap beta = lhs - rhs;
    return {beta.target(), cokernel(beta)};
}

InducedResult induce_on_quotient(const GradedMap& op, const BalancedQuotient& source,
                                 const BalancedQuotient& target) {
    InducedResult out;
    const ColumnSpan& src_rel = source.quotient.relations;
    const ColumnSpan& tgt_rel = target.quotient.relations;
    for (int k = 0; k < src_rel.rank(); ++k) {
        std::vector<CyclotomicScalar> pushed = op.apply(src_rel.basis_vector(k));
        if (!tgt_rel.contains(pushed)) {
            out.well_defined = false;
            out.witness = "relation basis vector " + std::to_string(k) +
                          " maps outside the target relation subspace";
            return out;
        }
    }
    out.well_defined = true;
    out.induced = compose(target.quotient.projection, compose(op, source.quotient.section));
    return out;
}

TripleCocyclic build_triple_quotient(const TripleData& t, int level, const BuildOptions& options) {
    TripleCocyclic out{build_triple_paracocyclic(t, level, options), {}, {}, {}};

    for (int n = 0; n <= level; ++n) out.quotients.push_back(balanced_quotient(t, n));

    CocyclicModule induced;
    induced.build_checks = out.ambient.build_checks;
    for (int n = 0; n <= level; ++n) induced.levels.push_back(out.quotients[n].quotient.space);

    auto push = [&](const GradedMap& op, int src_level, int tgt_level, const std::string& name) {
        InducedResult res = induce_on_quotient(op, out.quotients[src_level], out.quotients[tgt_level]);
        out.induction_checks.add(name, res.well_defined, res.witness);
        if (res.induced) return *res.induced;
        return GradedMap(out.quotients[src_level].quotient.space,
                         out.quotients[tgt_level].quotient.space);
    };

    induced.faces.resize(level + 1);
    for (int n = 1; n <= level; ++n)
        for (int i = 0; i <= n; ++i)
            induced.faces[n].push_back(push(out.ambient.faces[n][i], n - 1, n, tag("induced_delta", n, i)));
    induced.degeneracies.resize(level);
    for (int n = 0; n + 1 <= level; ++n)
        for (int i = 0; i <= n; ++i)
            induced.degeneracies[n].push_back(
                push(out.ambient.degeneracies[n][i], n + 1, n, tag("induced_sigma", n, i)));
    for (int n = 0; n <= level; ++n)
        induced.cyclic.push_back(push(out.ambient.cyclic[n], n, n, tag("induced_tau", n)));

    out.induced = std::move(induced);
    return out;
}

}  // namespace anyonic
