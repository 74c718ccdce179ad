/* catgsb — Gröbner-Shirshov bases for small categories.
 *
 * C API of the shared library. All functions return a status code; on
 * CATGSB_OK (and for catgsb_check / catgsb_verify also on CATGSB_FAIL) the
 * output parameters are populated. String outputs are heap-allocated and
 * must be released with catgsb_string_free(); handles with their _free()
 * function. catgsb_last_error() returns a thread-local message describing
 * the most recent failure.
 */
#ifndef CATGSB_H
#define CATGSB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes.
 *   CATGSB_OK            success; for check/verify: the property holds
 *   CATGSB_FAIL          the mathematical property does not hold
 *   CATGSB_ERR_PARSE     input text failed to parse or validate
 *   CATGSB_ERR_INVALID   invalid arguments or presentation state
 *   CATGSB_ERR_LIMIT     a configured limit was hit (partial result)
 *   CATGSB_ERR_INTERNAL  unexpected internal failure
 */
#define CATGSB_OK 0
#define CATGSB_FAIL 1
#define CATGSB_ERR_PARSE 2
#define CATGSB_ERR_INVALID 3
#define CATGSB_ERR_LIMIT 4
#define CATGSB_ERR_INTERNAL 5

typedef struct catgsb_presentation_s catgsb_presentation;

typedef struct catgsb_options_s {
  /* Order override: NULL for the presentation default, else one of
   * "deglex", "simplicial", "cyclic". A deglex override ranks edges in
   * declaration order. */
  const char* order;
  int threads;                 /* <= 0 means 1 */
  long max_steps;              /* completion cap; <= 0 means 256 */
  long max_len;                /* irr length cap; < 0 derives p + 2q + 2 */
  unsigned long long seed;     /* randomized subcommands */
} catgsb_options;

void catgsb_options_init(catgsb_options* opts);

const char* catgsb_version(void);
const char* catgsb_last_error(void);
void catgsb_string_free(char* s);

/* --- presentations ------------------------------------------------------ */

/* Parses the presentation file grammar (see README). */
int catgsb_presentation_parse(const char* text, catgsb_presentation** out);

/* family: "simplicial", "cyclic" (relations rho1..rho3) or "cyclic-sc"
 * (rho1..rho5); max_dim >= 1 is the truncation bound. */
int catgsb_presentation_builtin(const char* family, int max_dim,
                                catgsb_presentation** out);

void catgsb_presentation_free(catgsb_presentation* p);

/* Round-trippable rendering in the presentation grammar. */
int catgsb_presentation_render(const catgsb_presentation* p, char** out_text);

/* One-line JSON summary (counts, order, family). */
int catgsb_presentation_summary(const catgsb_presentation* p, char** out_json);

/* --- engine ------------------------------------------------------------- */

/* Checks every composition. CATGSB_OK = Gröbner-Shirshov basis in scope,
 * CATGSB_FAIL = nontrivial compositions found; out_json carries the full
 * report either way. */
int catgsb_check(const catgsb_presentation* p, const catgsb_options* opts,
                 char** out_json);

/* Shirshov completion. CATGSB_OK when confluent within limits,
 * CATGSB_ERR_LIMIT when max_steps ran out (the JSON log still reports the
 * partial basis, flagged non-confluent). */
int catgsb_complete(const catgsb_presentation* p, const catgsb_options* opts,
                    char** out_json);

/* Normal form of a word given in wire syntax ("E(1,0).H(0,0)" or "id(0)").
 * with_trace != 0 embeds the reduction certificate. */
int catgsb_normal_form(const catgsb_presentation* p,
                       const catgsb_options* opts, const char* word,
                       int with_trace, char** out_json);

/* Irreducible words between two vertices (names as declared; builtin
 * presentations use "0", "1", ...). */
int catgsb_irr(const catgsb_presentation* p, const catgsb_options* opts,
               const char* from, const char* to, char** out_json);

int catgsb_irr_count(const catgsb_presentation* p, const catgsb_options* opts,
                     const char* from, const char* to,
                     unsigned long long* out_count);

/* Built-in verification batteries: suite is "simplicial" or "cyclic".
 * CATGSB_OK iff every sub-check passes; out_json lists them. */
int catgsb_verify(const char* suite, int max_dim, const catgsb_options* opts,
                  char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CATGSB_H */
