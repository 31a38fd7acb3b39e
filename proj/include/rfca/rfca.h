/*
 *   Copyright 2026 The rfca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * rfca C interface.
 *
 * Objects are opaque handles created by rfca_*_from_* functions and released
 * with the matching rfca_*_free. Every fallible call returns an rfca_status;
 * on failure rfca_last_error() describes the problem (per thread, valid until
 * the next failing call on that thread). Strings returned through char** are
 * heap-allocated and must be released with rfca_string_free.
 */

#ifndef RFCA_H
#define RFCA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  if defined(RFCA_BUILDING_LIBRARY)
#    define RFCA_API __declspec(dllexport)
#  else
#    define RFCA_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) && (__GNUC__ >= 4)
#  define RFCA_API __attribute__((visibility("default")))
#else
#  define RFCA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as CLI exit codes. */
typedef enum rfca_status {
  RFCA_OK                      = 0,
  RFCA_ERR_INPUT               = 1,
  RFCA_ERR_NOT_DISTINCT        = 2,
  RFCA_ERR_INVALID_CERTIFICATE = 3,
  RFCA_ERR_CAP_EXCEEDED        = 4,
  RFCA_ERR_INTERNAL            = 5
} rfca_status;

typedef struct rfca_monoid      rfca_monoid;
typedef struct rfca_rule        rfca_rule;
typedef struct rfca_automaton   rfca_automaton;
typedef struct rfca_certificate rfca_certificate;

RFCA_API const char* rfca_version(void);
RFCA_API const char* rfca_last_error(void);
RFCA_API void        rfca_string_free(char* s);

/* Finite monoids */

RFCA_API rfca_status rfca_monoid_from_catalog(const char* name, rfca_monoid** out);
RFCA_API rfca_status rfca_monoid_from_json(const char* json, rfca_monoid** out);
/* `table` is row-major, size*size entries. */
RFCA_API rfca_status rfca_monoid_from_table(size_t          size,
                                            const uint32_t* table,
                                            uint32_t        identity,
                                            rfca_monoid**   out);
RFCA_API void        rfca_monoid_free(rfca_monoid* m);
RFCA_API size_t      rfca_monoid_size(const rfca_monoid* m);
RFCA_API uint32_t    rfca_monoid_identity(const rfca_monoid* m);
RFCA_API uint32_t    rfca_monoid_product(const rfca_monoid* m, uint32_t a, uint32_t b);
RFCA_API int         rfca_monoid_is_commutative(const rfca_monoid* m);
/* Writes up to `capacity` generators; *count receives the full count. */
RFCA_API rfca_status rfca_monoid_generating_set(const rfca_monoid* m,
                                                uint32_t*          out,
                                                size_t             capacity,
                                                size_t*            count);
/* Brute force over set partitions; RFCA_ERR_CAP_EXCEEDED above size 8. */
RFCA_API rfca_status rfca_monoid_congruence_count(const rfca_monoid* m, size_t* count);
RFCA_API rfca_status rfca_monoid_to_json(const rfca_monoid* m, char** json);

/* Cellular automata over a finite monoid */

/* Lists CA(M, A) as JSON: {"count", "identity_present", "closed",
   "graphs" (only if include_graphs)}. `cap` bounds |A^M|. */
RFCA_API rfca_status rfca_ca_enumerate(const rfca_monoid* m,
                                       uint32_t           alphabet,
                                       uint64_t           cap,
                                       int                include_graphs,
                                       char**             listing_json);
/* Reads {"monoid"?, "alphabet"?, "graph"}; `monoid` (nullable) and
   `alphabet` (0 = unspecified) supply missing fields. */
RFCA_API rfca_status rfca_automaton_from_json(const char*        json,
                                              const rfca_monoid* monoid,
                                              uint32_t           alphabet,
                                              rfca_automaton**   out);
RFCA_API void        rfca_automaton_free(rfca_automaton* a);

/* Local rules over Z */

RFCA_API rfca_status rfca_rule_from_wolfram(unsigned number, rfca_rule** out);
RFCA_API rfca_status rfca_rule_from_json(const char* json, rfca_rule** out);
RFCA_API void        rfca_rule_free(rfca_rule* r);
RFCA_API size_t      rfca_rule_radius(const rfca_rule* r);
RFCA_API rfca_status rfca_rules_equal(const rfca_rule* a, const rfca_rule* b, int* equal);
/* Applies the rule to the periodic word of the given period; `out` receives
   `period` symbols. */
RFCA_API rfca_status rfca_rule_apply(const rfca_rule* r,
                                     const uint32_t*  word,
                                     size_t           period,
                                     uint32_t*        out);

/* Separation certificates */

RFCA_API rfca_status rfca_separate_rules(const rfca_rule*   a,
                                         const rfca_rule*   b,
                                         rfca_certificate** out);
RFCA_API rfca_status rfca_separate_automata(const rfca_automaton* a,
                                            const rfca_automaton* b,
                                            rfca_certificate**    out);
/* Endomorphisms are image arrays of length rfca_monoid_size(source).
   `test_target` may be NULL, meaning the source itself. */
RFCA_API rfca_status rfca_separate_endomorphisms(const rfca_monoid* source,
                                                 const rfca_monoid* test_target,
                                                 const uint32_t*    alpha1,
                                                 const uint32_t*    alpha2,
                                                 size_t             length,
                                                 rfca_certificate** out);
RFCA_API rfca_status rfca_certificate_from_json(const char* json, rfca_certificate** out);
RFCA_API rfca_status rfca_certificate_to_json(const rfca_certificate* c, char** json);
/* RFCA_OK if every invariant holds, RFCA_ERR_INVALID_CERTIFICATE otherwise
   (rfca_last_error names the first failing invariant). */
RFCA_API rfca_status rfca_certificate_verify(const rfca_certificate* c);
RFCA_API void        rfca_certificate_free(rfca_certificate* c);

/* Hopficity */

/* Report for the endomorphism `psi` (image array) of `source` and the
   distinct elements s1, s2, with T = source and rho = identity. */
RFCA_API rfca_status rfca_malcev_check(const rfca_monoid* source,
                                       const uint32_t*    psi,
                                       size_t             length,
                                       uint32_t           s1,
                                       uint32_t           s2,
                                       char**             report_json);

#ifdef __cplusplus
}
#endif

#endif /* RFCA_H */
