#ifndef TMLAB_H
#define TMLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes returned by fallible calls.
 */
typedef enum TmlabStatus {
  TMLAB_STATUS_OK = 0,
  TMLAB_STATUS_NULL_ARGUMENT = 1,
  TMLAB_STATUS_INVALID_UTF8 = 2,
  TMLAB_STATUS_UNKNOWN_MACHINE = 3,
  TMLAB_STATUS_PARSE_ERROR = 4,
  TMLAB_STATUS_BAD_INPUT = 5,
  TMLAB_STATUS_BUFFER_TOO_SMALL = 6,
} TmlabStatus;

/*
 Why a run stopped.
 */
typedef enum TmlabHalt {
  TMLAB_HALT_EXPLICIT = 0,
  TMLAB_HALT_EMPTY_ENTRY = 1,
  TMLAB_HALT_STATIONARY_IDENTITY = 2,
  TMLAB_HALT_BUDGET_EXCEEDED = 3,
  TMLAB_HALT_LEFT_FENCE_VIOLATION = 4,
} TmlabHalt;

/*
 A machine table.
 */
typedef struct TmlabMachine TmlabMachine;

/*
 The result of a run: steps, halt reason and final configuration.
 */
typedef struct TmlabRun TmlabRun;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Loads a bundled machine: `addition`, `neary4x6`, `pedagogical-utm` or `rna-utm`.

 # Safety
 `id` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TmlabStatus tmlab_machine_bundled(const char *id, struct TmlabMachine **out);

/*
 Parses a machine from table text.

 # Safety
 `source` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TmlabStatus tmlab_machine_parse(const char *source, struct TmlabMachine **out);

/*
 Number of states, or 0 for a null handle.

 # Safety
 `machine` must be null or a live handle.
 */
uint32_t tmlab_machine_state_count(const struct TmlabMachine *machine);

/*
 # Safety
 `machine` must be null or a handle not yet freed.
 */
void tmlab_machine_free(struct TmlabMachine *machine);

/*
 Runs `machine` in state 1 with `input` on cells 0.. and the head on
 cell 0, for at most `budget` steps.

 # Safety
 `machine` must be a live handle, `input` a NUL-terminated string and
 `out` a valid pointer.
 */
enum TmlabStatus tmlab_run(const struct TmlabMachine *machine,
                           const char *input,
                           uint64_t budget,
                           struct TmlabRun **out);

/*
 Steps applied, or 0 for a null handle.

 # Safety
 `run` must be null or a live handle.
 */
uint64_t tmlab_run_steps(const struct TmlabRun *run);

/*
 # Safety
 `run` must be a live handle.
 */
enum TmlabHalt tmlab_run_halt(const struct TmlabRun *run);

/*
 # Safety
 `run` must be a live handle.
 */
uint32_t tmlab_run_state(const struct TmlabRun *run);

/*
 # Safety
 `run` must be a live handle.
 */
int64_t tmlab_run_head(const struct TmlabRun *run);

/*
 Copies the final tape window.

 # Safety
 `run` must be a live handle, `buf` null or writable for `cap` bytes, and
 `len` a valid pointer.
 */
enum TmlabStatus tmlab_run_window(const struct TmlabRun *run, char *buf, size_t cap, size_t *len);

/*
 # Safety
 `run` must be null or a handle not yet freed.
 */
void tmlab_run_free(struct TmlabRun *run);

/*
 Converts universal-machine glyphs to nucleotides.

 # Safety
 `text` must be a NUL-terminated string, `buf` null or writable for `cap`
 bytes, and `len` a valid pointer.
 */
enum TmlabStatus tmlab_rna_encode(const char *text, char *buf, size_t cap, size_t *len);

/*
 Converts nucleotides to universal-machine glyphs.

 # Safety
 As for [`tmlab_rna_encode`].
 */
enum TmlabStatus tmlab_rna_decode(const char *text, char *buf, size_t cap, size_t *len);

/*
 Static description of a status code; unknown codes give "unknown status".
 */
const char *tmlab_status_str(int32_t status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TMLAB_H */
