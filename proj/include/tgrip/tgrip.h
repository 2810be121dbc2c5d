/* C interface to the twisted-group-ring equivalence engine.
 *
 * Usage pattern: create a context, call query functions, free returned
 * strings with tgrip_string_free, free the context last.  Every query
 * returns TGRIP_OK (0) or an error code; on failure *out is left NULL and
 * tgrip_last_error(ctx) holds a message until the next call on the same
 * context.  Returned payloads are JSON rendered with two-space indentation;
 * parsing and re-rendering a payload reproduces it byte for byte.
 *
 * Contexts are not thread-safe; use one per thread.
 */
#ifndef TGRIP_H
#define TGRIP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tgrip_ctx tgrip_ctx;     /* registry handle plus caches */
typedef struct tgrip_group tgrip_group; /* one instantiated group */

enum tgrip_code {
  TGRIP_OK = 0,
  TGRIP_E_BADARG = 1,       /* NULL pointer or malformed argument */
  TGRIP_E_UNKNOWN_NAME = 2, /* name not in the registry */
  TGRIP_E_BAD_PRIME = 3,    /* p not prime, or below the entry's floor */
  TGRIP_E_SCALE = 4,        /* no computable route within bounds */
  TGRIP_E_PARSE = 5,        /* presentation text did not parse */
  TGRIP_E_VERIFY = 6,       /* no certificate covers the requested pair */
  TGRIP_E_INTERNAL = 7,     /* invariant violation inside the library */
  TGRIP_E_NOMEM = 8
};

/* Library version, static storage. */
const char* tgrip_version(void);

tgrip_ctx* tgrip_ctx_new(void);
void tgrip_ctx_free(tgrip_ctx* ctx);

/* Message for the most recent failing call on this context; empty string
 * after a success.  Storage lives in the context. */
const char* tgrip_last_error(const tgrip_ctx* ctx);

/* Frees any string returned through a char** parameter. */
void tgrip_string_free(char* s);

/* ----------------------------------------------------------- registry -- */

/* Summary of every registry entry (no instantiation). */
int tgrip_names(tgrip_ctx* ctx, char** out);

/* Full record of one entry instantiated at (p, r): order, declared
 * multiplier, recorded equivalence class, attached representation group. */
int tgrip_entry(tgrip_ctx* ctx, const char* name, int64_t p, int64_t r,
                char** out);

/* Schur multiplier report for an entry: the declared invariants when the
 * registry carries them, the computed ones when a presentation exists. */
int tgrip_schur(tgrip_ctx* ctx, const char* name, int64_t p, int64_t r,
                char** out);

/* ------------------------------------------------------------- groups -- */

int tgrip_group_open(tgrip_ctx* ctx, const char* name, int64_t p, int64_t r,
                     tgrip_group** out);
/* One-off presentation, e.g. "gens: x(p) y(p) z(p); comm x y = z". */
int tgrip_group_parse(tgrip_ctx* ctx, const char* presentation, int64_t p,
                      tgrip_group** out);
void tgrip_group_free(tgrip_group* g);
int64_t tgrip_group_order(const tgrip_group* g);
/* Computed multiplier invariants of the group. */
int tgrip_group_multiplier(tgrip_ctx* ctx, const tgrip_group* g, char** out);

/* ------------------------------------------------------------- engine -- */

/* Twisted block profile of an entry.  force_cover != 0 ignores attached
 * representation groups and declared shortcuts and recomputes everything
 * through a covering group. */
int tgrip_profile(tgrip_ctx* ctx, const char* name, int64_t p, int64_t r,
                  int force_cover, char** out);

/* Equivalence verdict for two entries at the same prime.  bound <= 0 uses
 * the default character-group search cap. */
int tgrip_compare(tgrip_ctx* ctx, const char* name_a, const char* name_b,
                  int64_t p, int64_t r_a, int64_t r_b, int64_t bound,
                  char** out);

/* Verifies the registry certificate covering the named pair. */
int tgrip_verify(tgrip_ctx* ctx, const char* name_a, const char* name_b,
                 int64_t p, int64_t r, char** out);

/* --------------------------------------------------------- acceptance -- */

/* Runs acceptance criterion 1..7, or all of them when criterion is 0.
 * The payload reports pass/fail per criterion; the call itself returns
 * TGRIP_OK as long as the run completed. */
int tgrip_reproduce(tgrip_ctx* ctx, int criterion, char** out);

#ifdef __cplusplus
}
#endif

#endif /* TGRIP_H */
