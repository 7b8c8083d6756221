#ifndef RANEY_RANEY_H
#define RANEY_RANEY_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RANEY_BUILDING)
#    define RANEY_API __declspec(dllexport)
#  else
#    define RANEY_API __declspec(dllimport)
#  endif
#else
#  define RANEY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum raney_status {
  RANEY_OK = 0,
  RANEY_ERR_PARSE = 1,
  RANEY_ERR_NOT_A_PARTIAL_ORDER = 2,
  RANEY_ERR_NOT_A_LATTICE = 3,
  RANEY_ERR_NO_BOUNDED_ELEMENT = 4,
  RANEY_ERR_SIZE_LIMIT = 5,
  RANEY_ERR_CAP_EXCEEDED = 6,
  RANEY_ERR_PRECONDITION = 7,
  RANEY_ERR_NOT_DUALIZING = 8,
  RANEY_ERR_NOT_AUTOMORPHISM = 9,
  RANEY_ERR_NOT_COMPLETELY_DISTRIBUTIVE = 10,
  RANEY_ERR_NOT_DOWN_CLOSED = 11,
  RANEY_ERR_MALFORMED_FAMILY = 12,
  RANEY_ERR_INVARIANT_VIOLATED = 13,
  RANEY_ERR_INVALID_ARGUMENT = 14,
  RANEY_ERR_INTERNAL = 15
} raney_status;

typedef struct raney_lattice raney_lattice;
typedef struct raney_report raney_report;

typedef struct raney_config {
  size_t max_homset;
  size_t max_autodual;
  size_t triple_cap;
  size_t pair_cap;
  /* comma-separated check ids; NULL or "" runs every check */
  const char* checks;
  /* nonzero adds per-check elapsed times to the output */
  int timing;
} raney_config;

RANEY_API void raney_config_init(raney_config* config);

/* Message of the last failing call on this thread; never NULL. */
RANEY_API const char* raney_last_error(void);
RANEY_API const char* raney_status_name(raney_status status);

/* Strings returned through char** are owned by the caller. */
RANEY_API void raney_string_free(char* s);

RANEY_API raney_status raney_lattice_parse(const char* text, size_t max_size, raney_lattice** out);
/* family: "chain", "boolean", "M" (param atoms) or "N5" (param ignored). */
RANEY_API raney_status raney_lattice_generate(const char* family, size_t param, raney_lattice** out);
RANEY_API raney_status raney_lattice_to_json(const raney_lattice* lattice, char** out);
RANEY_API size_t raney_lattice_size(const raney_lattice* lattice);
RANEY_API void raney_lattice_free(raney_lattice* lattice);

/* Fails with RANEY_ERR_INVALID_ARGUMENT on an unknown check id. */
RANEY_API raney_status raney_validate_checks(const char* checks);

RANEY_API raney_status raney_analyze(const raney_lattice* lattice, const char* name,
                                     const raney_config* config, raney_report** out);
RANEY_API raney_status raney_verify(const raney_lattice* lattice, const char* name,
                                    const raney_config* config, raney_report** out);
RANEY_API raney_status raney_verify_corpus(const raney_config* config, raney_report** out);
RANEY_API raney_status raney_verify_m5(const raney_config* config, raney_report** out);

RANEY_API raney_status raney_report_json(const raney_report* report, char** out);
RANEY_API raney_status raney_report_text(const raney_report* report, char** out);
RANEY_API size_t raney_report_failed(const raney_report* report);
RANEY_API size_t raney_report_skipped(const raney_report* report);
RANEY_API void raney_report_free(raney_report* report);

#ifdef __cplusplus
}
#endif

#endif
