#ifndef OPETOPE_C_H
#define OPETOPE_C_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OPE_API __declspec(dllexport)
#else
#define OPE_API __attribute__((visibility("default")))
#endif

typedef enum ope_status {
  OPE_OK = 0,
  OPE_VALIDATION_FAILED = 1,
  OPE_PARSE_ERROR = 2,
  OPE_BOUND_EXCEEDED = 3,
  OPE_INVALID_ARGUMENT = 4,
  OPE_INTERNAL = 5
} ope_status;

typedef struct ope_opetope ope_opetope;

/* Strings returned through char** are owned by the caller and released with
   ope_string_free. On failure the out-parameter is left NULL and
   ope_last_error() describes the failure (per thread, until the next call). */

OPE_API const char* ope_status_name(ope_status status);
OPE_API const char* ope_last_error(void);
OPE_API void ope_string_free(char* s);

/* Parses and validates an opetope given as JSON text. */
OPE_API ope_status ope_opetope_from_json(const char* json, ope_opetope** out);
/* Built-in examples: "k3", "faces", "k4". */
OPE_API ope_status ope_opetope_example(const char* name, ope_opetope** out);
OPE_API void ope_opetope_free(ope_opetope* o);
OPE_API ope_status ope_opetope_to_json(const ope_opetope* o, char** out);
OPE_API int ope_opetope_dim(const ope_opetope* o);
OPE_API size_t ope_opetope_arity(const ope_opetope* o);
OPE_API int ope_opetope_equal(const ope_opetope* a, const ope_opetope* b);

/* Validates JSON text. The report is written on success and on validation
   failure: "valid: ..." or "invalid: <code>: <location>: <reason>". */
OPE_API ope_status ope_validate(const char* json, char** report);

/* JSON array of every dim-k opetope with the given frame and tree size at
   most max_leaves. The frame is either the mini-language ("(3,2)->4", "3"),
   or a JSON frame {"inputs": [...], "output": {...}}, or neither (k <= 3:
   all opetopes within the bound). Pass NULL for the unused ones. */
OPE_API ope_status ope_enumerate(int dim, const char* frame_spec, const char* frame_json, size_t max_leaves,
                                 char** out);
/* Number of opetopes ope_enumerate would list. */
OPE_API ope_status ope_count(int dim, const char* frame_spec, const char* frame_json, size_t max_leaves,
                             size_t* count);

/* JSON array of the morphisms a -> b, each with an "inverse" flag. */
OPE_API ope_status ope_homs(const ope_opetope* a, const ope_opetope* b, char** out);

/* Face report at depth 1 (one-step relations) or 2 (also the deep classes),
   as text or JSON. */
OPE_API ope_status ope_faces(const ope_opetope* o, int depth, int as_json, char** out);
/* *holds is set to 1 or 0; *witness (may be NULL) gets the first failure. */
OPE_API ope_status ope_check_tf(const ope_opetope* o, int* holds, char** witness);

/* Correspondence report as JSON. dim <= 3 covers all frames within
   max_leaves; dim 4 uses frame_json, or the built-in k4 frame when NULL.
   Returns OPE_VALIDATION_FAILED (report still written) on a mismatch. */
OPE_API ope_status ope_crosscheck(int dim, size_t max_leaves, const char* frame_json, char** out);

OPE_API ope_status ope_export_dot(const ope_opetope* o, char** out);

#ifdef __cplusplus
}
#endif

#endif
