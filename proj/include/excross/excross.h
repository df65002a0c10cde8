#ifndef EXCROSS_EXCROSS_H
#define EXCROSS_EXCROSS_H

/* C interface to the excross library. Objects are opaque handles released
 * with their _free function. Every call returns a status; on failure the
 * message is available from excross_last_error() on the same thread until
 * the next call. Strings returned through char** are released with
 * excross_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EXCROSS_API __declspec(dllexport)
#else
#define EXCROSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum excross_status {
  EXCROSS_OK = 0,
  EXCROSS_E_INVALID_ARGUMENT = 1,
  EXCROSS_E_BAD_DOCUMENT = 2,
  EXCROSS_E_BAD_LABELS = 3,
  EXCROSS_E_NON_LATIN_SQUARE = 4,
  EXCROSS_E_NO_IDENTITY = 5,
  EXCROSS_E_NON_ASSOCIATIVE = 6,
  EXCROSS_E_INDEX_OUT_OF_RANGE = 7,
  EXCROSS_E_BASE_SIZE_MISMATCH = 8,
  EXCROSS_E_GROUP_MISMATCH = 9,
  EXCROSS_E_GROUP_TOO_LARGE = 10,
  EXCROSS_E_BOUND_TOO_SMALL = 11,
  EXCROSS_E_INVALID_ACTION = 12,
  EXCROSS_E_DIMENSION_MISMATCH = 13,
  EXCROSS_E_NOT_AN_IDEAL = 14,
  EXCROSS_E_NON_ASSOCIATIVE_L = 15,
  EXCROSS_E_PRODUCT_ESCAPES_IDEAL = 16,
  EXCROSS_E_SOURCE_MISMATCH = 17,
  EXCROSS_E_NOT_WELL_DEFINED = 18,
  EXCROSS_E_NOT_SQUARE = 19,
  EXCROSS_E_INTERNAL = 99
} excross_status;

typedef struct excross_group excross_group;
typedef struct excross_semigroup excross_semigroup;

/* Message of the last failed call on this thread, or "". */
EXCROSS_API const char* excross_last_error(void);
EXCROSS_API void excross_string_free(char* s);

/* Preset ("cyclic N", "klein4", "sym3", "trivial") or a group document path. */
EXCROSS_API excross_status excross_group_load(const char* spec, excross_group** out);
/* A group document given as JSON text. */
EXCROSS_API excross_status excross_group_from_json(const char* json, excross_group** out);
EXCROSS_API void excross_group_free(excross_group* group);
EXCROSS_API size_t excross_group_order(const excross_group* group);
EXCROSS_API excross_status excross_group_multiply(const excross_group* group, size_t g, size_t h, size_t* out);
EXCROSS_API excross_status excross_group_inverse(const excross_group* group, size_t g, size_t* out);
EXCROSS_API excross_status excross_group_name(const excross_group* group, size_t g, char** out);

/* S(G) enumerated; element 0 is the unit. max_order 0 uses the default. */
EXCROSS_API excross_status excross_semigroup_create(const excross_group* group, size_t max_order,
                                                    excross_semigroup** out);
EXCROSS_API void excross_semigroup_free(excross_semigroup* sg);
EXCROSS_API size_t excross_semigroup_size(const excross_semigroup* sg);
EXCROSS_API excross_status excross_semigroup_generator(const excross_semigroup* sg, size_t g, size_t* out);
EXCROSS_API excross_status excross_semigroup_multiply(const excross_semigroup* sg, size_t x, size_t y, size_t* out);
EXCROSS_API excross_status excross_semigroup_star(const excross_semigroup* sg, size_t x, size_t* out);
EXCROSS_API excross_status excross_semigroup_is_idempotent(const excross_semigroup* sg, size_t x, int* out);
EXCROSS_API excross_status excross_semigroup_leq(const excross_semigroup* sg, size_t x, size_t y, int* out);
EXCROSS_API excross_status excross_semigroup_gamma(const excross_semigroup* sg, size_t x, size_t* out);
/* "e_{s1}...e_{sn}[g]" */
EXCROSS_API excross_status excross_semigroup_text(const excross_semigroup* sg, size_t x, char** out);

typedef enum excross_format { EXCROSS_FORMAT_JSON = 0, EXCROSS_FORMAT_CSV = 1, EXCROSS_FORMAT_TEXT = 2 } excross_format;
typedef enum excross_level { EXCROSS_LEVEL_EXHAUSTIVE = 0, EXCROSS_LEVEL_QUICK = 1 } excross_level;

/* One CLI verb. NULL strings are absent options; max_word_len 0 and
 * max_group_order 0 use the defaults. */
typedef struct excross_run_options {
  const char* command;
  const char* subcommand;
  const char* group;
  const char* action;
  const char* algebra;
  excross_format format;
  excross_level level;
  size_t max_word_len;
  size_t max_group_order;
  uint64_t seed;
} excross_run_options;

/* Runs a verb. *exit_code is 0 when every check passed, 1 when a check
 * failed, 2 on bad input; *output holds the report and *diagnostic a one
 * line explanation (both always set, possibly empty). The status is
 * EXCROSS_OK unless the arguments themselves are unusable. */
EXCROSS_API excross_status excross_run(const excross_run_options* options, char** output, char** diagnostic,
                                       int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* EXCROSS_EXCROSS_H */
