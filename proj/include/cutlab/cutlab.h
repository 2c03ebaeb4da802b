#ifndef CUTLAB_H
#define CUTLAB_H

/* C interface to the cutlab core. All functions are thread-safe; errors are
 * reported per thread. Strings returned as char* are heap-allocated UTF-8
 * JSON documents owned by the caller and released with cutlab_free. */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Static version string, e.g. "0.1.0". Do not free. */
const char* cutlab_version(void);

/* Message for the most recent failed call on the calling thread, or "" if
 * the last call succeeded. Storage is owned by the library. */
const char* cutlab_last_error(void);

/* Status classes mirrored from the core's error codes. */
enum cutlab_status {
  CUTLAB_OK = 0,
  CUTLAB_E_DOMAIN = 1,     /* precondition violated */
  CUTLAB_E_CAP = 2,        /* resource cap exceeded; no approximate fallback */
  CUTLAB_E_UNBOUNDED = 3,  /* objective unbounded */
  CUTLAB_E_INFEASIBLE = 4, /* empty feasible set where one is required */
  CUTLAB_E_PARSE = 5,      /* malformed input document */
  CUTLAB_E_INTERNAL = 6    /* invariant failure inside the library */
};

/* Frees any char buffer returned by this library. NULL is a no-op. */
void cutlab_free(char* buf);

/* Opaque mixed-integer instance handle. */
typedef struct cutlab_instance cutlab_instance;

/* Parses an instance JSON document (schema in the repository README).
 * Returns NULL on error; consult cutlab_last_error. */
cutlab_instance* cutlab_instance_parse(const char* json);

/* Serializes an instance back to its JSON document. Caller frees. */
char* cutlab_instance_json(const cutlab_instance* inst);

void cutlab_instance_free(cutlab_instance* inst);

/* Runs the named generator with a JSON object of integer parameters
 * (NULL or "" for defaults). Returns NULL on error. */
cutlab_instance* cutlab_generate(const char* kind, const char* params_json, uint64_t seed);

/* Structural tags of the instance as a JSON array of strings. Caller frees. */
char* cutlab_classify(const cutlab_instance* inst);

/* Rounding-cut loop on a bounded pure-integer instance. caps_json is a JSON
 * object of cap overrides (NULL or "" for defaults). Returns a JSON report
 * {"status","optimum","solution","iterations","cuts"}. Caller frees. */
char* cutlab_gomory(const cutlab_instance* inst, const char* caps_json);

/* Generic command runner; the CLI is a thin shell over this entry point.
 * Takes one JSON command document {"command": ..., ...} and returns a JSON
 * result document, or NULL on hard errors. When exit_code is non-NULL it
 * receives 0 (success), 1 (a verification inside the command failed), or
 * 2 (usage/parse error). Caller frees the returned buffer. */
char* cutlab_run(const char* command_json, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* CUTLAB_H */
