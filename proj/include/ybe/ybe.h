#ifndef YBE_YBE_H
#define YBE_YBE_H

/*
 * C interface to the solution library. Every fallible call returns a
 * ybe_status; on failure ybe_last_error() holds a one-line diagnostic for the
 * calling thread. Strings handed out through char** parameters are owned by
 * the caller and released with ybe_string_free. Big integers cross the
 * boundary as decimal strings.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(YBE_BUILDING_LIBRARY)
#define YBE_API __attribute__((visibility("default")))
#else
#define YBE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ybe_status {
  YBE_OK = 0,
  YBE_ERR_INVALID_ARGUMENT = 1,
  YBE_ERR_OUT_OF_RANGE = 2,
  YBE_ERR_SIZE_MISMATCH = 3,
  YBE_ERR_NOT_BIJECTIVE = 4,
  YBE_ERR_PARSE = 5,
  YBE_ERR_NOT_A_SOLUTION = 6,
  YBE_ERR_LIMIT_EXCEEDED = 7,
  YBE_ERR_IO = 8,
  YBE_ERR_INTERNAL = 99
} ybe_status;

typedef struct ybe_solution ybe_solution;
typedef struct ybe_key ybe_key;
typedef struct ybe_census ybe_census;

YBE_API const char* ybe_last_error(void);
YBE_API const char* ybe_status_name(ybe_status status);
YBE_API void ybe_string_free(char* s);

/* Solutions */

YBE_API ybe_status ybe_solution_parse(const char* text, ybe_solution** out);
YBE_API ybe_status ybe_solution_load(const char* path, ybe_solution** out);
/* sigma_images holds n one-line permutations back to back (n*n entries). */
YBE_API ybe_status ybe_solution_from_sigma(size_t n, const uint32_t* sigma_images,
                                           ybe_solution** out);
YBE_API ybe_status ybe_solution_format(const ybe_solution* s, const char* comment, char** out);
YBE_API ybe_status ybe_solution_save(const ybe_solution* s, const char* path, const char* comment);
YBE_API size_t ybe_solution_size(const ybe_solution* s);
/* Writes n images of sigma_x (or gamma_x). */
YBE_API ybe_status ybe_solution_sigma(const ybe_solution* s, uint32_t x, uint32_t* images);
YBE_API ybe_status ybe_solution_gamma(const ybe_solution* s, uint32_t x, uint32_t* images);
YBE_API void ybe_solution_free(ybe_solution* s);

/* Verification and analysis */

typedef struct ybe_verify_report {
  int nondegenerate;
  int involutive;
  int braided;
  int has_involutive_witness;
  uint32_t involutive_witness[2];
  int has_braided_witness;
  uint32_t braided_witness[3];
} ybe_verify_report;

YBE_API ybe_status ybe_verify(const ybe_solution* s, ybe_verify_report* out);

typedef struct ybe_analysis {
  int nondegenerate;
  int involutive;
  int braided;
  int64_t class_m;             /* -1: search cap exceeded */
  int indecomposable;
  int64_t retract_level;       /* -1: irretractable */
  int condition_C;
  int64_t condition_C_column;  /* -1: none */
  uint64_t iyb_order;
  int column_pair_condition;
} ybe_analysis;

YBE_API ybe_status ybe_analyze(const ybe_solution* s, ybe_analysis* out);

/* "x1x4 x4x2 ..." for words of length m (2 or the class). */
YBE_API ybe_status ybe_frozen_elements(const ybe_solution* s, size_t m, char** out);
/* "sigma_1 sigma_4 sigma_2 sigma_3 = Id" for the class identity at x. */
YBE_API ybe_status ybe_class_witness(const ybe_solution* s, uint32_t x, char** out);
/* Orbits of the IYB group, e.g. "{1,4} {2,3}". */
YBE_API ybe_status ybe_orbits(const ybe_solution* s, char** out);
/* One line per column of the orbit table of 1, up to the first repeat. */
YBE_API ybe_status ybe_orbit_table(const ybe_solution* s, char** out);

/* Pump */

/* iterations-fold pump; max_points 0 means the default bound. */
YBE_API ybe_status ybe_pump(const ybe_solution* s, unsigned iterations, uint64_t max_points,
                            ybe_solution** out);
/* Cycles of g_i^k; pair_notation selects "(T_1^1,T_2^3)" over renumbered points. */
YBE_API ybe_status ybe_g_cycles(const ybe_solution* s, uint32_t i, uint32_t k, int pair_notation,
                                char** out);

/* Relations: one "lhs = rhs" line each. */
YBE_API ybe_status ybe_structure_relations(const ybe_solution* s, char** out);
/* FRT relations in T notation, followed by a report block. *ok is the report verdict. */
YBE_API ybe_status ybe_frt_relations(const ybe_solution* s, char** out, int* ok);

/* Checks that pumping preserves verification, class, retract level,
 * decomposability, and indecomposability under condition C, for s (may be
 * NULL) and every solution of size up to census_max_n (at most 4). */
YBE_API ybe_status ybe_preservation_check(const ybe_solution* s, size_t census_max_n,
                                          char** report, int* ok);

/* Tree and keys */

YBE_API ybe_status ybe_tree_render(uint64_t n, const char* i, unsigned k, char** out);

/* materialize != 0 stores the whole permutation (bounded by max_points, 0 = default). */
YBE_API ybe_status ybe_key_new(const ybe_solution* base, const char* i, unsigned k, int materialize,
                               uint64_t max_points, ybe_key** out);
YBE_API ybe_status ybe_key_eval(const ybe_key* key, const char* m, int inverse, char** out);
YBE_API ybe_status ybe_key_domain_size(const ybe_key* key, char** out);
YBE_API void ybe_key_free(ybe_key* key);

/* Round-trip check of a key on the listed points (may be NULL), on every
 * point when all_points is set (domains up to 2^24), and on random_count
 * seeded random points. A materialized key is also compared with its tree
 * walk. *ok is 1 when every check holds. */
YBE_API ybe_status ybe_key_check(const ybe_key* key, const char* points, int all_points,
                                 uint64_t random_count, uint64_t seed, char** report, int* ok);

/* Block codec and protocols. Blocks are whitespace-separated decimals;
 * text_mode pads output blocks to two digits. */

YBE_API ybe_status ybe_encode_text(const char* text, char** blocks);
YBE_API ybe_status ybe_decode_text(const char* blocks, char** text);
YBE_API ybe_status ybe_encrypt(const ybe_key* key, const char* blocks, int text_mode, char** out);
YBE_API ybe_status ybe_decrypt(const ybe_key* key, const char* blocks, int text_mode, char** out);
YBE_API ybe_status ybe_sign(const ybe_key* sender, const ybe_key* receiver, const char* blocks,
                            int text_mode, char** intermediate, char** transmitted);
YBE_API ybe_status ybe_open_signature(const ybe_key* receiver, const ybe_key* sender,
                                      const char* blocks, int text_mode, char** out);

/* Simulated key exchange. The transcript has one labelled line per message
 * and step; *keys_equal reports whether both parties derived the same key. */
YBE_API ybe_status ybe_key_exchange(const ybe_solution* base, unsigned k, const char* i,
                                    const char* j, const char* l, uint64_t seed,
                                    uint64_t max_points, char** transcript, int* keys_equal);

/* Census */

YBE_API ybe_status ybe_census_build(size_t n, ybe_census** out);

typedef struct ybe_census_filter_spec {
  int indecomposable;  /* -1 any, 0 no, 1 yes */
  int irretractable;   /* -1 any, 0 no, 1 yes */
  int condition_C;     /* -1 any, 0 no, 1 yes */
  int64_t class_m;     /* 0 any */
} ybe_census_filter_spec;

YBE_API ybe_status ybe_census_filter(const ybe_census* c, const ybe_census_filter_spec* spec,
                                     ybe_census** out);
YBE_API uint64_t ybe_census_total(const ybe_census* c);
YBE_API size_t ybe_census_iso(const ybe_census* c);
YBE_API ybe_status ybe_census_representative(const ybe_census* c, size_t index,
                                             ybe_solution** out);
YBE_API ybe_status ybe_census_summary(const ybe_census* c, char** out);
YBE_API ybe_status ybe_census_write(const ybe_census* c, const char* dir);
YBE_API void ybe_census_free(ybe_census* c);

/* Estimators */

typedef struct ybe_cost_constants {
  double op_seconds;      /* one elementary operation */
  double search_seconds;  /* testing one candidate permutation */
} ybe_cost_constants;

/* NULL constants select the defaults (1e-9, 1e-8). */
YBE_API ybe_status ybe_cost_model(uint64_t n, unsigned k, int small_i,
                                  const ybe_cost_constants* constants, char** operations,
                                  double* seconds, double* log10_seconds);
YBE_API ybe_status ybe_attack_cost(uint64_t n, unsigned k, const char* solution_count,
                                   const ybe_cost_constants* constants, double* seconds,
                                   double* log10_seconds);
YBE_API ybe_status ybe_search_space(uint64_t n, unsigned k, const ybe_cost_constants* constants,
                                    double* log10_permutations, double* log10_seconds);
/* cycle_type lists "d^count" terms, e.g. "4^64" or "1^2 2^1". exact may be NULL. */
YBE_API ybe_status ybe_cycle_type_count(uint64_t size, const char* cycle_type, double* log10_count,
                                        char** exact);

#ifdef __cplusplus
}
#endif

#endif
