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

/*
 * C interface of the anyonic shared library.
 *
 * Structures are opaque handles created and destroyed by the library; every
 * fallible call returns an any_status and, on failure, leaves a thread-local
 * message readable through any_last_error(). Reports, tables and structure
 * files travel as JSON strings with exact rational scalars; strings returned
 * through char** are heap-allocated and must be released with
 * any_string_free(). Handles are immutable after creation and may be shared
 * across threads.
 */

#ifndef ANYONIC_H
#define ANYONIC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum any_status {
    ANY_OK = 0,
    ANY_ERR_INVALID_ARGUMENT = 1,
    ANY_ERR_PARSE = 2,
    ANY_ERR_FIELD_MISMATCH = 3,
    ANY_ERR_SHAPE_MISMATCH = 4,
    ANY_ERR_DIVISION_BY_ZERO = 5,
    ANY_ERR_PRECONDITION = 6,
    ANY_ERR_CAP_EXCEEDED = 7,
    ANY_ERR_LEVEL_BOUND = 8,
    ANY_ERR_INTERNAL = 9
} any_status;

typedef struct any_hopf any_hopf;         /* braided Hopf algebra, optionally with a stored pair */
typedef struct any_rmatrix any_rmatrix;   /* quasitriangular element of H (x) H */
typedef struct any_cocyclic any_cocyclic; /* cocyclic module up to a level */
typedef struct any_triple any_triple;     /* coefficient data with balanced quotients */

const char* any_version(void);
/* Message of the most recent failure on this thread; never NULL. */
const char* any_last_error(void);
void any_string_free(char* s);

/* ---- Hopf algebras ---------------------------------------------------- */

any_status any_hopf_czn(int n, any_hopf** out);
any_status any_hopf_from_json(const char* json, any_hopf** out);
any_status any_hopf_to_json(const any_hopf* h, char** json_out);
void any_hopf_free(any_hopf* h);

/* Exact axiom suite; *all_pass = 1 iff every check holds. */
any_status any_hopf_verify(const any_hopf* h, char** report_json, int* all_pass);

/* ---- Quasitriangular structures and transmutation ---------------------- */

any_status any_rmatrix_czn(int n, any_rmatrix** out);
any_status any_rmatrix_from_json(const any_hopf* h, const char* json, any_rmatrix** out);
any_status any_rmatrix_to_json(const any_hopf* h, const any_rmatrix* r, char** json_out);
void any_rmatrix_free(any_rmatrix* r);

any_status any_quasitriangular_verify(const any_hopf* h, const any_rmatrix* r, char** report_json,
                                      int* all_pass);
any_status any_transmute(const any_hopf* h, const any_rmatrix* r, any_hopf** out);

/* ---- Braid-symmetry checks --------------------------------------------- */

/* Arithmetic support criterion: 2ij = 0 mod n (symmetric), ij = 0 (flip). */
any_status any_braid_support_check(int n, const int* support_a, int len_a, const int* support_b,
                                   int len_b, int* symmetric_pair, int* flip);
/* Criterion plus the exact matrix check on spaces with those supports;
 * the report records both and their agreement. */
any_status any_braid_check_report(int n, const int* support_a, int len_a, const int* support_b,
                                  int len_b, char** report_json, int* all_pass);

/* ---- Cocyclic modules --------------------------------------------------- */

/* pair_json may be NULL for (epsilon, eta). force != 0 builds through
 * validation failures (they are still recorded in reports). */
any_status any_cocyclic_build(const any_hopf* h, const char* pair_json, int level, long cap,
                              int force, any_cocyclic** out);
void any_cocyclic_free(any_cocyclic* cm);
any_status any_cocyclic_verify(const any_cocyclic* cm, char** report_json, int* all_pass);
any_status any_cocyclic_para_defect(const any_cocyclic* cm, int level, int* defect_rank);
any_status any_cocyclic_operators_json(const any_cocyclic* cm, char** json_out);

/* HH/HC dimension table in degrees 0..up_to. */
any_status any_cohomology(const any_cocyclic* cm, int up_to, char** table_json);

/* ---- Coefficient triples ------------------------------------------------ */

/* coalgebra_json NULL: C = H acting on itself by multiplication.
 * module_json NULL: M = I with trivial action and coaction. */
any_status any_triple_build(const any_hopf* h, const char* coalgebra_json, const char* module_json,
                            int level, long cap, any_triple** out);
void any_triple_free(any_triple* t);
/* Structure checks, hypothesis checks, quotient dimensions, induction
 * well-definedness and the identity suite on the quotient family. */
any_status any_triple_verify(const any_triple* t, char** report_json, int* all_pass);

/* ---- End-to-end run ----------------------------------------------------- */

any_status any_pipeline(int n, int level, long cap, char** report_json, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* ANYONIC_H */
