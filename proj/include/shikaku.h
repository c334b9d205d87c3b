/* C interface to the Shikaku zero-knowledge proof engine.
 *
 * All objects are opaque handles created and destroyed here. Functions
 * return SHK_OK on success; verdict-carrying calls return SHK_REJECT when
 * the verifier rejects. Strings returned through out-parameters are
 * heap-allocated and must be released with shk_free().
 */
#ifndef SHIKAKU_H
#define SHIKAKU_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SHK_OK 0            /* accepted / succeeded */
#define SHK_REJECT 1        /* verifier or oracle rejected */
#define SHK_ERR_PARSE 2     /* malformed input text */
#define SHK_ERR_ARGUMENT 3  /* structural misuse (bad handle state, bounds) */
#define SHK_ERR_LIMIT 4     /* a configured size bound refused the input */
#define SHK_ERR_INTERNAL 5  /* invariant breach; report a bug */

typedef struct shk_puzzle shk_puzzle;
typedef struct shk_partition shk_partition;

const char* shk_status_name(int status);
void shk_free(char* s);

/* --- puzzles ------------------------------------------------------- */

/* Text format: header "rows cols", then rows lines of cols tokens,
 * "." for empty cells, a positive integer for a clue. */
int shk_puzzle_parse(const char* text, shk_puzzle** out, char** error);
void shk_puzzle_free(shk_puzzle* puzzle);
char* shk_puzzle_format(const shk_puzzle* puzzle);
int shk_puzzle_rows(const shk_puzzle* puzzle);
int shk_puzzle_cols(const shk_puzzle* puzzle);
int shk_puzzle_clue_count(const shk_puzzle* puzzle);

/* --- solutions ------------------------------------------------------ */

/* Text format: one "index row col row' col'" line per clue. */
int shk_partition_parse(const shk_puzzle* puzzle, const char* text,
                        shk_partition** out, char** error);
void shk_partition_free(shk_partition* partition);
char* shk_partition_format(const shk_partition* partition);

/* Plain validity oracle. SHK_OK when the solution is accepted, SHK_REJECT
 * with a message naming the violated condition otherwise. */
int shk_check(const shk_puzzle* puzzle, const shk_partition* partition,
              char** message);

/* Exhaustive solver for small instances (up to max_cells grid cells,
 * pass 0 for the default bound of 25). At most `limit` partitions are
 * returned (0 means no cap). Free the array with shk_partitions_free. */
int shk_solve(const shk_puzzle* puzzle, int max_cells, int limit,
              shk_partition*** partitions, int* count, char** error);
void shk_partitions_free(shk_partition** partitions, int count);

/* --- the zero-knowledge protocol ------------------------------------ */

/* Runs the interactive verification with the honest prover strategy for
 * the given solution. Returns SHK_OK on accept, SHK_REJECT on reject; the
 * transcript JSON (verifier view by default, audit view when audit_view
 * is nonzero) is stored in *transcript_json either way. */
int shk_verify(const shk_puzzle* puzzle, const shk_partition* partition,
               uint64_t seed, int audit_view, char** transcript_json,
               char** error);

/* Emits a simulated verifier view built from public information only.
 * SHK_REJECT when no accepting transcript exists (clue sum mismatch). */
int shk_simulate(const shk_puzzle* puzzle, uint64_t seed,
                 char** transcript_json, char** error);

/* Runs the bundled audit suites (completeness, soundness, zero-knowledge,
 * subprotocol exactness, card count, determinism) on built-in fixtures.
 * Returns SHK_OK when every criterion passes, SHK_REJECT otherwise.
 * `trials` scales the statistical battery (0 for the default of 2000);
 * `seeds` scales the completeness sweep (0 for the default of 100). */
int shk_audit(uint64_t seed, int trials, int seeds, char** report_json,
              char** summary_text, char** error);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SHIKAKU_H */
