#ifndef BPROOF_BPROOF_H_
#define BPROOF_BPROOF_H_

#include <stddef.h>

#if defined(BPROOF_BUILDING)
#define BPROOF_API __attribute__((visibility("default")))
#else
#define BPROOF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bproof_status {
  BPROOF_OK = 0,
  BPROOF_INVALID = 1,       /* proof rejected, script left goals, self-test failed */
  BPROOF_IO_ERROR = 2,
  BPROOF_DECODE_ERROR = 3,
  BPROOF_PARSE_ERROR = 4,
  BPROOF_BAD_ARGUMENT = 5,
  BPROOF_INTERNAL = 6
} bproof_status;

typedef struct bproof_context bproof_context;
typedef struct bproof_session bproof_session;
typedef struct bproof_term bproof_term;

BPROOF_API const char* bproof_version(void);
BPROOF_API const char* bproof_status_name(bproof_status status);
/* 0 for BPROOF_OK, 1 for BPROOF_INVALID, 2 otherwise. */
BPROOF_API int bproof_exit_code(bproof_status status);

BPROOF_API bproof_context* bproof_context_new(void);
BPROOF_API void bproof_context_free(bproof_context* ctx);
/* Report and diagnostics of the last call; valid until the next call. */
BPROOF_API const char* bproof_context_output(const bproof_context* ctx);
BPROOF_API const char* bproof_context_error(const bproof_context* ctx);
BPROOF_API void bproof_context_set_color(bproof_context* ctx, int enabled);

/* Replays a .bprf file and reports the certified sequent. */
BPROOF_API bproof_status bproof_check_file(bproof_context* ctx, const char* path);
/* Runs a script on a goal file; writes the proof to emit_path when it is
   not NULL and the proof is complete. */
BPROOF_API bproof_status bproof_prove_files(bproof_context* ctx, const char* goal_path, const char* script_path,
                                            const char* emit_path);
BPROOF_API bproof_status bproof_selftest(bproof_context* ctx, unsigned depth);

BPROOF_API bproof_session* bproof_session_new(void);
BPROOF_API void bproof_session_free(bproof_session* session);
BPROOF_API void bproof_session_set_color(bproof_session* session, int enabled);
/* Runs one REPL command line. */
BPROOF_API bproof_status bproof_session_exec(bproof_session* session, const char* line);
BPROOF_API const char* bproof_session_output(const bproof_session* session);
BPROOF_API int bproof_session_finished(const bproof_session* session);

/* Terms carry the names of their free variables; equal terms have the same
   structure and the same free names in the same order. */
BPROOF_API bproof_status bproof_term_parse(const char* text, bproof_term** out, char** error);
BPROOF_API char* bproof_term_print(const bproof_term* term);
BPROOF_API int bproof_term_equal(const bproof_term* a, const bproof_term* b);
BPROOF_API size_t bproof_term_depth(const bproof_term* term);
BPROOF_API void bproof_term_free(bproof_term* term);
BPROOF_API void bproof_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* BPROOF_BPROOF_H_ */
