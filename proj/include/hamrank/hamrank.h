/* C interface to the hamrank library. */
#ifndef HAMRANK_H
#define HAMRANK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HR_API __declspec(dllexport)
#else
#define HR_API __attribute__((visibility("default")))
#endif

typedef enum {
    HR_OK = 0,
    HR_PROPERTY_FAILED = 1,
    HR_INVALID_ARGUMENT = 2,
    HR_LIMIT_EXCEEDED = 3,
    HR_IO_ERROR = 4,
    HR_INTERNAL_ERROR = 5
} hr_status;

typedef enum { HR_MODE_THRESHOLD = 0, HR_MODE_EXACT = 1 } hr_mode;
typedef enum { HR_FORMAT_JSON = 0, HR_FORMAT_CSV = 1, HR_FORMAT_TEXT = 2 } hr_format;
typedef enum { HR_ORACLE_MODP = 0, HR_ORACLE_EXACT = 1, HR_ORACLE_BOTH = 2 } hr_oracle;

typedef enum {
    HR_CMD_SPECTRUM = 0,
    HR_CMD_BOUNDS,
    HR_CMD_RANK,
    HR_CMD_VERIFY,
    HR_CMD_EXPORT,
    HR_CMD_DCC,
    HR_CMD_SWEEP
} hr_command;

/* Strings are borrowed for the duration of the call; NULL means empty. */
typedef struct {
    hr_command command;
    const char* target; /* verify group or sweep kind */
    int n;
    int a;
    hr_mode mode;
    int max_n; /* 0 = command default */
    uint64_t seed;
    hr_oracle oracle;
    hr_format format;
    const char* in_path;
    const char* out_path;
} hr_run_config;

HR_API const char* hr_version(void);

/* Message for the last non-OK status on this thread. Never NULL. */
HR_API const char* hr_last_error(void);

/* Strings handed out by the library are released with hr_free. */
HR_API void hr_free(void* p);

HR_API void hr_run_config_init(hr_run_config* cfg);

/* *out receives the rendered output on HR_OK and HR_PROPERTY_FAILED. */
HR_API hr_status hr_run(const hr_run_config* cfg, char** out);

typedef struct hr_instance hr_instance;

HR_API hr_status hr_instance_create(int n, int a, hr_mode mode, hr_instance** out);
HR_API void hr_instance_destroy(hr_instance* inst);
/* Decimal strings. */
HR_API hr_status hr_instance_eigenvalue(const hr_instance* inst, int m, char** out);
HR_API hr_status hr_instance_rank(const hr_instance* inst, char** out);

typedef struct {
    int64_t d_lower;
    int64_t cstar_lower;
    int64_t qstar_lower;
    int general_n_minus_2;
    int small_a_applies;
    int small_a_full_n;
    int has_complement;
    int complement_a; /* valid when has_complement */
} hr_bounds;

HR_API hr_status hr_instance_bounds(const hr_instance* inst, hr_bounds* out);

typedef struct hr_matrix hr_matrix;

HR_API hr_status hr_matrix_build(const hr_instance* inst, hr_matrix** out);
HR_API hr_status hr_matrix_parse(const char* text, hr_matrix** out);
HR_API hr_status hr_matrix_load(const char* path, hr_matrix** out);
HR_API void hr_matrix_destroy(hr_matrix* mat);
HR_API hr_status hr_matrix_to_text(const hr_matrix* mat, char** out);
HR_API hr_status hr_matrix_rank_mod_p(const hr_matrix* mat, uint64_t prime, int64_t* out);
HR_API hr_status hr_matrix_exact_dcc(const hr_matrix* mat, int* out);

#ifdef __cplusplus
}
#endif

#endif
