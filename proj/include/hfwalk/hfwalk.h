/* C interface to the height-function walk library.
 *
 * All functions return a status code:
 *   0  success
 *   1  internal error
 *   2  invalid parameters
 *   3  budget exceeded (enumeration or size limits)
 *   4  verification failure (the JSON output still describes the failures)
 *
 * On any nonzero code hfw_last_error(ctx) describes the problem.  Output
 * strings are heap-allocated, NUL-terminated, and must be released with
 * hfw_string_free.  A context is not thread-safe; use one per thread.
 */
#ifndef HFWALK_H
#define HFWALK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hfw_ctx hfw_ctx;

hfw_ctx *hfw_ctx_new(void);
void hfw_ctx_free(hfw_ctx *ctx);
const char *hfw_last_error(const hfw_ctx *ctx);
void hfw_string_free(char *s);

/* Torus parameters, derived quantities, and basic counts. */
int hfw_params_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2, char **out);

/* Full shape enumeration (JSON list), guarded by cap. */
int hfw_enumerate_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                       int64_t cap, char **out);

/* Shape-graph summary: |S|, |M|, degree range, connectivity. */
int hfw_graph_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2, int64_t cap,
                   char **out);

/* Exact (or certified-iterative) diffusivity report. */
int hfw_exact_sigma_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                         int64_t cap, char **out);

/* CSV sweep over np pairs (p1,p2) taken from plist[2*i], plist[2*i+1]. */
int hfw_sweep_csv(hfw_ctx *ctx, const int *plist, int np, int n1, int n2,
                  int64_t cap, char **out);

/* Monte Carlo diffusivity.  burn_in < 0 and window == 0 pick defaults. */
int hfw_simulate_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                      int64_t steps, int runs, int64_t burn_in,
                      int64_t window, uint64_t seed, char **out);

/* Minimal-strip statistics over uniformly sampled loops. */
int hfw_sample_loops_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                          int64_t samples, uint64_t seed, char **out);

/* Identity suite: lemma8 | lemma9 | lemma20 | lemma21 | corrector |
 * bijection | counts | all.  Returns 4 if any identity fails. */
int hfw_verify_json(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                    const char *suite, uint64_t seed, int64_t samples,
                    char **out);

/* Ordered-simplex integral estimates for a given g, plus the interleaving
 * constant when p1 > 0 (uses the torus (p1,p2,n1,n2) for loop sampling). */
int hfw_integral_check_json(hfw_ctx *ctx, int g, int64_t samples,
                            uint64_t seed, int p1, int p2, int n1, int n2,
                            char **out);

/* SVG of a shape: shape_index >= 0 selects from the sorted enumeration
 * (guarded by cap); shape_index < 0 draws a random shape by walking the
 * chain from the canonical shape with the given seed. */
int hfw_render_svg(hfw_ctx *ctx, int p1, int p2, int n1, int n2,
                   int64_t shape_index, uint64_t seed, int64_t cap,
                   char **out);

#ifdef __cplusplus
}
#endif

#endif /* HFWALK_H */
