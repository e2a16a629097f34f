#ifndef WCS_H
#define WCS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum WcsStatus {
  WCS_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  WCS_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  WCS_STATUS_INVALID_UTF8 = 2,
  /**
   * Program, observation, query or context text did not parse.
   */
  WCS_STATUS_PARSE_ERROR = 3,
  /**
   * The request is well formed but cannot be carried out.
   */
  WCS_STATUS_INVALID_REQUEST = 4,
  /**
   * The observation (or primary observation) has no explanation.
   */
  WCS_STATUS_NO_EXPLANATION = 5,
  /**
   * The least model violates an integrity constraint. The model is
   * still written.
   */
  WCS_STATUS_CONSTRAINT_VIOLATED = 6,
  /**
   * An internal error.
   */
  WCS_STATUS_INTERNAL = 7,
} WcsStatus;

typedef enum WcsReasoning {
  WCS_REASONING_SKEPTICAL = 0,
  WCS_REASONING_CREDULOUS = 1,
} WcsReasoning;

/**
 * A parsed program with its extra grounding constants.
 */
typedef struct WcsProgram WcsProgram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses program text. `constants` is an optional comma-separated list of
 * extra grounding constants. On success `*out` receives a handle to release
 * with [`wcs_program_free`].
 *
 * # Safety
 * String arguments are null or NUL-terminated; `out` is valid for writing.
 */
enum WcsStatus wcs_program_parse(const char *source,
                                 const char *constants,
                                 struct WcsProgram **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `program` is null or a handle from [`wcs_program_parse`] not yet freed.
 */
void wcs_program_free(struct WcsProgram *program);

/**
 * Least model as `{"true": [...], "false": [...], "unknown": [...]}`.
 * Returns `ConstraintViolated` (with the model written) when a denial fails.
 *
 * # Safety
 * `program` is a live handle; `out` is valid for writing.
 */
enum WcsStatus wcs_model(const struct WcsProgram *program, char **out);

/**
 * Minimal explanations of `observation` as
 * `{"explanations": [{"facts": [...], "model": {...}}], "already_entailed": bool}`.
 * `context` is optional context-file text (`subject = true.` lines). An
 * empty list is returned with status `Ok`.
 *
 * # Safety
 * `program` is a live handle; strings are null or NUL-terminated; `out` is
 * valid for writing.
 */
enum WcsStatus wcs_explain(const struct WcsProgram *program,
                           const char *observation,
                           const char *context,
                           char **out);

/**
 * Value of the conjunction `query` across the explanations of
 * `observation`, as `{"value": "TRUE" | "FALSE" | "UNKNOWN"}`.
 *
 * # Safety
 * As for [`wcs_explain`].
 */
enum WcsStatus wcs_entail(const struct WcsProgram *program,
                          const char *observation,
                          const char *query,
                          enum WcsReasoning mode,
                          char **out);

/**
 * Classifies `o2` against `o1` under `relation` (`side-effect`,
 * `contested`, `relevant` or `joint`), as
 * `{"relation": ..., "labels": [...], "witnesses": [...]}`. No applicable
 * label gives `"labels": ["NONE"]` with status `Ok`.
 *
 * # Safety
 * As for [`wcs_explain`].
 */
enum WcsStatus wcs_classify(const struct WcsProgram *program,
                            const char *relation,
                            const char *o1,
                            const char *o2,
                            char **out);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on this thread; do not free.
 */
const char *wcs_last_error(void);

/**
 * Releases a string returned through an out-parameter. Null is ignored.
 *
 * # Safety
 * `s` is null or a string from this library not yet freed.
 */
void wcs_string_free(char *s);

/**
 * Library version, statically allocated.
 */
const char *wcs_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WCS_H */
