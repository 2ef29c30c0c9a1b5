#ifndef MODIAG_H
#define MODIAG_H

/*
 * C interface to the modiag engine.
 *
 * Every call returns a modiag_status. Strings returned through char** are
 * owned by the caller and must be released with modiag_string_free. After a
 * non-OK status other than MODIAG_VERDICT_NO / MODIAG_UNKNOWN,
 * modiag_last_error() describes the failure (per thread).
 *
 * Place lists are comma-separated: "inf0", "inf1", ... for real places,
 * decimal primes or "v:<label>" for finite places. An empty string or NULL
 * means the empty set.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MODIAG_BUILDING_LIBRARY)
#    define MODIAG_API __declspec(dllexport)
#  else
#    define MODIAG_API __declspec(dllimport)
#  endif
#else
#  define MODIAG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum modiag_status {
  MODIAG_OK = 0,
  MODIAG_VERDICT_NO = 1,
  MODIAG_UNKNOWN = 2,
  MODIAG_ERR_USAGE = 3,
  MODIAG_ERR_DATA = 4,
  MODIAG_ERR_NETWORK = 5,
  MODIAG_ERR_INTERNAL = 6
} modiag_status;

typedef enum modiag_format { MODIAG_FORMAT_TEXT = 0, MODIAG_FORMAT_JSON = 1 } modiag_format;

typedef struct modiag_dataset modiag_dataset;

typedef struct modiag_fetch_options {
  const char* cache_dir; /* NULL: environment or default */
  const char* base_url;  /* NULL: environment or https://www.lmfdb.org */
  int offline;           /* nonzero: cache only; also set by MODIAG_OFFLINE */
} modiag_fetch_options;

MODIAG_API const char* modiag_version(void);
MODIAG_API const char* modiag_last_error(void);
MODIAG_API const char* modiag_status_name(modiag_status s);
MODIAG_API void modiag_string_free(char* s);

/* Datasets */
MODIAG_API modiag_status modiag_dataset_load(const char* path, modiag_dataset** out);
MODIAG_API modiag_status modiag_dataset_parse(const char* json_text, modiag_dataset** out);
MODIAG_API modiag_status modiag_dataset_empty(modiag_dataset** out);
MODIAG_API void modiag_dataset_free(modiag_dataset* ds);
MODIAG_API modiag_status modiag_dataset_merge_certificates(modiag_dataset* ds, const char* path);
MODIAG_API modiag_status modiag_dataset_clear_certificates(modiag_dataset* ds);
MODIAG_API modiag_status modiag_dataset_dump(const modiag_dataset* ds, char** out);

/* Goodness: OK = good / vanishes, VERDICT_NO = a form exists, UNKNOWN = undecided.
 * ramified: places of the quaternion algebra over Q (empty: the matrix algebra). */
MODIAG_API modiag_status modiag_check_curve(const modiag_dataset* ds, const char* curve, const char* ramified,
                                            modiag_format fmt, char** out);
MODIAG_API modiag_status modiag_check_triple(const modiag_dataset* ds, const char* a, const char* b, const char* c,
                                             const char* ramified, modiag_format fmt, char** out);
/* OK if the published lists are reproduced, VERDICT_NO otherwise. */
MODIAG_API modiag_status modiag_reproduce_tables(const modiag_dataset* ds, modiag_format fmt, char** out);

/* group_kind: "cyclic" or "dihedral". */
MODIAG_API modiag_status modiag_trilinear(const char* group_kind, long n, const char* a, const char* b, const char* c,
                                          modiag_format fmt, char** out);

/* signs: comma-separated "<place>=<+1|-1>" for finite places over Q. */
MODIAG_API modiag_status modiag_root_number(const char* signs, modiag_format fmt, char** out);
/* Local signs from the dataset's local data at every prime of the levels.
 * UNKNOWN when some local sign cannot be decided. */
MODIAG_API modiag_status modiag_root_number_triple(const modiag_dataset* ds, const char* a, const char* b,
                                                   const char* c, modiag_format fmt, char** out);

/* degree 1: over Q, otherwise an abstract totally real field of that degree.
 * place may be NULL. Odd ramification sets give MODIAG_ERR_DATA. */
MODIAG_API modiag_status modiag_hasse(int degree, const char* ramified, const char* place, modiag_format fmt,
                                      char** out);

/* primes: comma-separated odd primes. */
MODIAG_API modiag_status modiag_find_quadratic(const char* primes, modiag_format fmt, char** out);

/* Construction certificates are always JSON text; fmt selects the rendering. */
MODIAG_API modiag_status modiag_construct(const modiag_dataset* ds, const char* a, const char* b, const char* c,
                                          long prime, modiag_format fmt, char** out);
/* OK if valid, VERDICT_NO if some check fails. */
MODIAG_API modiag_status modiag_verify(const char* certificate_json, modiag_format fmt, char** out);

MODIAG_API modiag_status modiag_fetch_lmfdb(long level, int weight, const modiag_fetch_options* options,
                                            modiag_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
