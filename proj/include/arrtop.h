#ifndef ARRTOP_H
#define ARRTOP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arrtop_status {
    ARRTOP_OK = 0,
    ARRTOP_INTERNAL = 1,
    ARRTOP_PARSE = 2,
    ARRTOP_PRECONDITION = 3,
    ARRTOP_SYMMETRY = 4,
    ARRTOP_INVALID = 5
} arrtop_status;

typedef enum arrtop_format {
    ARRTOP_FORMAT_JSON = 0,
    ARRTOP_FORMAT_DOT = 1,
    ARRTOP_FORMAT_TEXT = 2
} arrtop_format;

typedef struct arrtop_arrangement arrtop_arrangement;

/* Message for the last failing call on this thread; owned by the library. */
const char* arrtop_last_error(void);

/* Input: {"dimension": l, "hyperplanes": [["p/q", ...], ...]}. */
arrtop_status arrtop_arrangement_from_json(const char* text, arrtop_arrangement** out);
/* Builtins: "coords", "braid:L", "dihedral:M"; essentialize is braid-only. */
arrtop_status arrtop_arrangement_builtin(const char* name, int essentialize,
                                         arrtop_arrangement** out);
void arrtop_arrangement_free(arrtop_arrangement* a);

size_t arrtop_arrangement_dimension(const arrtop_arrangement* a);
size_t arrtop_arrangement_size(const arrtop_arrangement* a);
arrtop_status arrtop_arrangement_json(const arrtop_arrangement* a, char** out);

/* Rendered artifacts; *out is malloc'd, release with arrtop_string_free. */
arrtop_status arrtop_faces(const arrtop_arrangement* a, size_t cap, arrtop_format format,
                           char** out);
arrtop_status arrtop_salvetti(const arrtop_arrangement* a, size_t cap, int with_homology,
                              arrtop_format format, char** out);
arrtop_status arrtop_presentation(const arrtop_arrangement* a, size_t cap, arrtop_format format,
                                  char** out);
arrtop_status arrtop_group(const arrtop_arrangement* a, size_t cap, char** out);
arrtop_status arrtop_check(const arrtop_arrangement* a, size_t cap, uint64_t seed,
                           arrtop_format format, int* all_pass, int* symmetry_pass, char** out);
/* Covector-axiom checks over a bare face list ({"covectors": [...]}). */
arrtop_status arrtop_check_faces(const char* text, arrtop_format format, int* all_pass,
                                 char** out);

void arrtop_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
