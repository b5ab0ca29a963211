/* C interface to the degree-sequence counting engine.
 *
 * Every function returns a status code (DEGCOUNT_OK on success) and
 * writes results through out-pointers. Counts are decimal strings;
 * free them with degcount_string_free. Reports are opaque; free them
 * with degcount_report_free.
 */

#ifndef DEGCOUNT_H
#define DEGCOUNT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define DEGCOUNT_OK 0
#define DEGCOUNT_EINVAL 1     /* invalid argument */
#define DEGCOUNT_ERESOURCE 2  /* table would not fit in memory */
#define DEGCOUNT_EEMPTY 3     /* extremum over an empty set */
#define DEGCOUNT_EINTERNAL 4  /* internal consistency failure */
#define DEGCOUNT_ENULL 5      /* required pointer was NULL */
#define DEGCOUNT_ERANGE 6     /* row index out of range */

#define DEGCOUNT_COL_L 0
#define DEGCOUNT_COL_H 1
#define DEGCOUNT_COL_D 2
#define DEGCOUNT_COL_D0 3

typedef struct DegcountReport DegcountReport;

/* Count L, H, D, D0 for every length 2..=n. threads == 0 uses all
 * cores. On success *out owns a report. */
int32_t degcount_count(uint32_t n, size_t threads, DegcountReport **out);

/* Number of rows in the report (0 for NULL). */
size_t degcount_report_len(const DegcountReport *report);

/* Sequence length of row idx. */
int32_t degcount_report_n(const DegcountReport *report, size_t idx,
                          uint32_t *out);

/* Decimal string of one count (DEGCOUNT_COL_*) in row idx. */
int32_t degcount_report_value(const DegcountReport *report, size_t idx,
                              int32_t column, char **out);

/* Whole report as CSV with header n,L,H,D,D0. */
int32_t degcount_report_csv(const DegcountReport *report, char **out);

/* Bounded partition function P(N,k,l,s) as a decimal string. */
int32_t degcount_pnkls(int64_t N, int64_t k, int64_t l, int64_t s,
                       char **out);

/* Graphical partitions G(N) of an even N, as a decimal string. */
int32_t degcount_gcount(uint64_t N, char **out);

/* Monte-Carlo estimate of D(n)/E(n); reproducible from (n, samples,
 * seed) for any thread count. */
int32_t degcount_estimate(uint32_t n, uint64_t samples, uint64_t seed,
                          size_t threads, uint64_t *hits, double *ratio,
                          double *std_err);

/* Release a string returned by this library. NULL is a no-op. */
void degcount_string_free(char *s);

/* Release a report. NULL is a no-op. */
void degcount_report_free(DegcountReport *report);

#ifdef __cplusplus
}
#endif

#endif /* DEGCOUNT_H */
