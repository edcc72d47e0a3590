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

#include "anyonic.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "anyonic/pipeline.hpp"
#include "anyonic/serialization.hpp"

using namespace anyonic;

struct any_hopf {
    BraidedHopfAlgebra value;
    ModularPair pair;  // pair stored in the source file, or (epsilon, eta)
};

struct any_rmatrix {
    QuasitriangularElement value;
};

struct any_cocyclic {
    CocyclicModule value;
};

struct any_triple {
    TripleCocyclic value;
    int level;
};

namespace {

thread_local std::string g_last_error = "";

any_status status_of(Errc code) {
    switch (code) {
        case Errc::invalid_argument: return ANY_ERR_INVALID_ARGUMENT;
        case Errc::parse: return ANY_ERR_PARSE;
        case Errc::field_mismatch: return ANY_ERR_FIELD_MISMATCH;
        case Errc::shape_mismatch: return ANY_ERR_SHAPE_MISMATCH;
        case Errc::division_by_zero: return ANY_ERR_DIVISION_BY_ZERO;
        case Errc::precondition: return ANY_ERR_PRECONDITION;
        case Errc::cap_exceeded: return ANY_ERR_CAP_EXCEEDED;
        case Errc::level_bound: return ANY_ERR_LEVEL_BOUND;
    }
    return ANY_ERR_INTERNAL;
}

template <typename Fn>
any_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return ANY_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return ANY_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ANY_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return ANY_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

any_status bad_argument(const char* what) {
    g_last_error = what;
    return ANY_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* any_version(void) { return "0.1.0"; }

const char* any_last_error(void) { return g_last_error.c_str(); }

void any_string_free(char* s) { std::free(s); }

/* ---- Hopf algebras ---------------------------------------------------- */

any_status any_hopf_czn(int n, any_hopf** out) {
    if (out == nullptr) return bad_argument("null output handle");
    return guarded([&] {
        OrdinaryHopf h = czn_group_algebra(n);
        ModularPair pair = trivial_pair(h);
        *out = new any_hopf{std::move(h), std::move(pair)};
    });
}

any_status any_hopf_from_json(const char* json, any_hopf** out) {
    if (json == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        Json j = parse_json(json, "hopf file");
        BraidedHopfAlgebra h = hopf_from_json(j);
        ModularPair pair = pair_from_hopf_json(h, j);
        *out = new any_hopf{std::move(h), std::move(pair)};
    });
}

any_status any_hopf_to_json(const any_hopf* h, char** json_out) {
    if (h == nullptr || json_out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        Json j = hopf_to_json(h->value, h->pair);
        *json_out = copy_string(j.dump(2));
    });
}

void any_hopf_free(any_hopf* h) { delete h; }

any_status any_hopf_verify(const any_hopf* h, char** report_json, int* all_pass) {
    if (h == nullptr) return bad_argument("null handle");
    return guarded([&] {
        Report report = verify_hopf_axioms(h->value);
        report.append(verify_modular_pair(h->value, h->pair));
        if (all_pass != nullptr) *all_pass = report.all_pass() ? 1 : 0;
        if (report_json != nullptr) *report_json = copy_string(report_to_json(report).dump(2));
    });
}

/* ---- Quasitriangular structures and transmutation ---------------------- */

any_status any_rmatrix_czn(int n, any_rmatrix** out) {
    if (out == nullptr) return bad_argument("null output handle");
    return guarded([&] { *out = new any_rmatrix{czn_r_matrix(n)}; });
}

any_status any_rmatrix_from_json(const any_hopf* h, const char* json, any_rmatrix** out) {
    if (h == nullptr || json == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        Json j = parse_json(json, "r-matrix file");
        *out = new any_rmatrix{rmatrix_from_json(h->value, j)};
    });
}

any_status any_rmatrix_to_json(const any_hopf* h, const any_rmatrix* r, char** json_out) {
    if (h == nullptr || r == nullptr || json_out == nullptr) return bad_argument("null argument");
    return guarded([&] { *json_out = copy_string(rmatrix_to_json(h->value, r->value).dump(2)); });
}

void any_rmatrix_free(any_rmatrix* r) { delete r; }

any_status any_quasitriangular_verify(const any_hopf* h, const any_rmatrix* r, char** report_json,
                                      int* all_pass) {
    if (h == nullptr || r == nullptr) return bad_argument("null handle");
    return guarded([&] {
        Report report = verify_quasitriangular(h->value, r->value);
        if (all_pass != nullptr) *all_pass = report.all_pass() ? 1 : 0;
        if (report_json != nullptr) *report_json = copy_string(report_to_json(report).dump(2));
    });
}

any_status any_transmute(const any_hopf* h, const any_rmatrix* r, any_hopf** out) {
    if (h == nullptr || r == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        BraidedHopfAlgebra hb = transmute(h->value, r->value);
        ModularPair pair = trivial_pair(hb);
        *out = new any_hopf{std::move(hb), std::move(pair)};
    });
}

/* ---- Braid-symmetry checks --------------------------------------------- */

any_status any_braid_support_check(int n, const int* support_a, int len_a, const int* support_b,
                                   int len_b, int* symmetric_pair, int* flip) {
    if ((support_a == nullptr && len_a > 0) || (support_b == nullptr && len_b > 0))
        return bad_argument("null support array");
    return guarded([&] {
        std::vector<int> a(support_a, support_a + len_a);
        std::vector<int> b(support_b, support_b + len_b);
        SymmetryCheck check = support_criterion(n, a, b);
        if (symmetric_pair != nullptr) *symmetric_pair = check.symmetric_pair ? 1 : 0;
        if (flip != nullptr) *flip = check.flip ? 1 : 0;
    });
}

any_status any_braid_check_report(int n, const int* support_a, int len_a, const int* support_b,
                                  int len_b, char** report_json, int* all_pass) {
    if ((support_a == nullptr && len_a > 0) || (support_b == nullptr && len_b > 0))
        return bad_argument("null support array");
    return guarded([&] {
        std::vector<int> a(support_a, support_a + len_a);
        std::vector<int> b(support_b, support_b + len_b);
        SymmetryCheck predicted = support_criterion(n, a, b);

        FieldPtr field = CyclotomicField::get(n);
        std::vector<int> dims_a(n, 0), dims_b(n, 0);
        for (int d : a) dims_a[d] = 1;
        for (int d : b) dims_b[d] = 1;
        SymmetryCheck exact =
            braid_symmetry_check(GradedSpace(field, dims_a), GradedSpace(field, dims_b));

        bool agree =
            predicted.symmetric_pair == exact.symmetric_pair && predicted.flip == exact.flip;
        if (all_pass != nullptr) *all_pass = agree ? 1 : 0;
        if (report_json != nullptr) {
            Json out = Json::object();
            out["n"] = n;
            out["support_a"] = a;
            out["support_b"] = b;
            Json crit = Json::object();
            crit["symmetric_pair"] = predicted.symmetric_pair;
            crit["flip"] = predicted.flip;
            out["criterion"] = std::move(crit);
            Json mat = Json::object();
            mat["symmetric_pair"] = exact.symmetric_pair;
            mat["flip"] = exact.flip;
            out["matrix"] = std::move(mat);
            out["agree"] = agree;
            *report_json = copy_string(out.dump(2));
        }
    });
}

/* ---- Cocyclic modules --------------------------------------------------- */

any_status any_cocyclic_build(const any_hopf* h, const char* pair_json, int level, long cap,
                              int force, any_cocyclic** out) {
    if (h == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        ModularPair pair = h->pair;
        if (pair_json != nullptr)
            pair = pair_from_json(h->value, parse_json(pair_json, "pair file"));
        BuildOptions options;
        if (cap > 0) options.cap = cap;
        options.enforce_valid = force == 0;
        *out = new any_cocyclic{build_cm_cocyclic(h->value, pair, level, options)};
    });
}

void any_cocyclic_free(any_cocyclic* cm) { delete cm; }

any_status any_cocyclic_verify(const any_cocyclic* cm, char** report_json, int* all_pass) {
    if (cm == nullptr) return bad_argument("null handle");
    return guarded([&] {
        Report report = cm->value.build_checks;
        report.append(verify_cocyclic_identities(cm->value));
        if (all_pass != nullptr) *all_pass = report.all_pass() ? 1 : 0;
        if (report_json != nullptr) *report_json = copy_string(report_to_json(report).dump(2));
    });
}

any_status any_cocyclic_para_defect(const any_cocyclic* cm, int level, int* defect_rank) {
    if (cm == nullptr || defect_rank == nullptr) return bad_argument("null argument");
    return guarded([&] { *defect_rank = para_defect(cm->value, level); });
}

any_status any_cocyclic_operators_json(const any_cocyclic* cm, char** json_out) {
    if (cm == nullptr || json_out == nullptr) return bad_argument("null argument");
    return guarded([&] { *json_out = copy_string(cocyclic_operators_to_json(cm->value).dump(2)); });
}

any_status any_cohomology(const any_cocyclic* cm, int up_to, char** table_json) {
    if (cm == nullptr || table_json == nullptr) return bad_argument("null argument");
    return guarded([&] {
        CohomologyReport table = hc_dimensions(cm->value, up_to);
        *table_json = copy_string(cohomology_to_json(table).dump(2));
    });
}

/* ---- Coefficient triples ------------------------------------------------ */

any_status any_triple_build(const any_hopf* h, const char* coalgebra_json, const char* module_json,
                            int level, long cap, any_triple** out) {
    if (h == nullptr || out == nullptr) return bad_argument("null argument");
    return guarded([&] {
        TripleData t = reduction_triple(h->value);
        if (coalgebra_json != nullptr)
            coalgebra_from_json(h->value, parse_json(coalgebra_json, "coalgebra file"), t);
        if (module_json != nullptr)
            module_from_json(h->value, parse_json(module_json, "module file"), t);
        BuildOptions options;
        if (cap > 0) options.cap = cap;
        *out = new any_triple{build_triple_quotient(t, level, options), level};
    });
}

void any_triple_free(any_triple* t) { delete t; }

any_status any_triple_verify(const any_triple* t, char** report_json, int* all_pass) {
    if (t == nullptr) return bad_argument("null handle");
    return guarded([&] {
        Report report = t->value.ambient.build_checks;
        for (int n = 0; n <= t->level; ++n) {
            const BalancedQuotient& q = t->value.quotients[n];
            report.add("quotient_dim(n=" + std::to_string(n) + ")", true,
                       std::to_string(q.quotient.space.total_dim()) + " of ambient " +
                           std::to_string(q.ambient.total_dim()));
        }
        report.append(t->value.induction_checks);
        report.append(verify_cocyclic_identities(t->value.induced));
        if (all_pass != nullptr) *all_pass = report.all_pass() ? 1 : 0;
        if (report_json != nullptr) *report_json = copy_string(report_to_json(report).dump(2));
    });
}

/* ---- End-to-end run ----------------------------------------------------- */

any_status any_pipeline(int n, int level, long cap, char** report_json, int* all_pass) {
    return guarded([&] {
        PipelineResult result = run_pipeline(n, level, cap > 0 ? cap : 1000000);
        if (all_pass != nullptr) *all_pass = result.all_pass ? 1 : 0;
        if (report_json != nullptr) {
            Json out = Json::object();
            out["command"] = "pipeline";
            out["n"] = result.n;
            out["level"] = result.level;
            out["quasitriangular"] = report_to_json(result.quasitriangular);
            out["transmutation"] = report_to_json(result.transmutation);
            out["cocyclic"] = report_to_json(result.cocyclic);
            out["cohomology"] = cohomology_to_json(result.cohomology);
            out["all_pass"] = result.all_pass;
            *report_json = copy_string(out.dump(2));
        }
    });
}

}  // extern "C"
