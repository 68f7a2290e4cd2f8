#ifndef GGT_H
#define GGT_H

#include <stddef.h>

#if defined(_WIN32)
#define GGT_API __declspec(dllexport)
#else
#define GGT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ggt_status {
    GGT_OK = 0,
    GGT_ERR_PARSE = 1,
    GGT_ERR_ALPHABET = 2,
    GGT_ERR_UNKNOWN_NAME = 3,
    GGT_ERR_INVALID_ARGUMENT = 4,
    GGT_ERR_OVERFLOW = 5,
    GGT_ERR_IO = 6,
    GGT_ERR_INTERNAL = 7
} ggt_status;

typedef struct ggt_graph ggt_graph;
typedef struct ggt_complex ggt_complex;
typedef struct ggt_presentation ggt_presentation;
typedef struct ggt_coset_table ggt_coset_table;
typedef struct ggt_report ggt_report;

/* Message of the last failing call on this thread ("" if none). */
GGT_API const char* ggt_last_error(void);
GGT_API const char* ggt_status_name(ggt_status status);
/* Every char** output is heap-allocated and released with this. */
GGT_API void ggt_free_string(char* text);

/* Braids. Words are over a..f (d, e, f expanded by the given fixture:
 * "right" (default when NULL), "left" or "literal") or over x, y. */
GGT_API ggt_status ggt_garside_nf(const char* word, const char* fixture, char** out);
GGT_API ggt_status ggt_garside_equal(const char* lhs, const char* rhs, const char* fixture, int mod_center,
                                     int* equal);
GGT_API ggt_status ggt_garside_orbit(const char* g, const char* seed, int steps, const char* convention,
                                     const char* fixture, char** json);
GGT_API ggt_status ggt_garside_audit_presentation(const char* fixture, char** json);

/* Coset enumeration. Subgroup generators are comma separated. */
GGT_API ggt_status ggt_presentation_fixture(const char* name, ggt_presentation** out);
GGT_API ggt_status ggt_presentation_parse(const char* text, ggt_presentation** out);
GGT_API void ggt_presentation_free(ggt_presentation* p);
GGT_API ggt_status ggt_coset_enumerate(const ggt_presentation* p, const char* subgroup, size_t cap,
                                       const char* strategy, ggt_coset_table** out);
GGT_API int ggt_coset_table_complete(const ggt_coset_table* t);
GGT_API size_t ggt_coset_table_count(const ggt_coset_table* t);
GGT_API size_t ggt_coset_table_defined(const ggt_coset_table* t);
GGT_API int ggt_coset_table_verify(const ggt_coset_table* t);
/* {"status", "count", "defined", "action": {gen: [1-based images]}} */
GGT_API ggt_status ggt_coset_table_json(const ggt_coset_table* t, char** out);
GGT_API void ggt_coset_table_free(ggt_coset_table* t);

/* Representations. */
GGT_API ggt_status ggt_verify_pi(char** json);
GGT_API ggt_status ggt_verify_perm(const char* composition, char** json);

/* Complexes: fixtures "x1bar", "ybar1" or the line-based text format. */
GGT_API ggt_status ggt_complex_fixture(const char* name, ggt_complex** out);
GGT_API ggt_status ggt_complex_parse(const char* text, ggt_complex** out);
GGT_API void ggt_complex_free(ggt_complex* c);
GGT_API ggt_status ggt_complex_json(const ggt_complex* c, char** out);
GGT_API ggt_status ggt_complex_text(const ggt_complex* c, char** out);
GGT_API ggt_status ggt_complex_link(const ggt_complex* c, const char* vertex, ggt_graph** out);
GGT_API ggt_status ggt_complex_link_condition(const ggt_complex* c, char** json);

/* Metric graphs. Lengths print as p/q meaning p/q * pi, "inf" when infinite. */
GGT_API ggt_status ggt_graph_fixture(const char* name, ggt_graph** out);
GGT_API ggt_status ggt_graph_parse(const char* text, ggt_graph** out);
GGT_API ggt_status ggt_graph_smooth(const ggt_graph* g, ggt_graph** out);
GGT_API void ggt_graph_free(ggt_graph* g);
GGT_API size_t ggt_graph_node_count(const ggt_graph* g);
GGT_API size_t ggt_graph_arc_count(const ggt_graph* g);
GGT_API ggt_status ggt_graph_girth(const ggt_graph* g, char** json);
GGT_API ggt_status ggt_graph_distance(const ggt_graph* g, const char* u, const char* v, char** out);
/* format: "dot", "json" or "text" */
GGT_API ggt_status ggt_graph_serialize(const ggt_graph* g, const char* format, char** out);

/* Embedding search. `automorphisms` holds target node maps, one "<node>
 * <image>" pair per line, maps separated by a line "--"; the single word "y"
 * selects the y-symmetry of a link. NULL or "" for none. */
typedef struct ggt_embed_options {
    int all;
    int trace;
    const char* automorphisms;
} ggt_embed_options;

GGT_API ggt_status ggt_embed(const ggt_graph* src, const ggt_graph* dst, const ggt_embed_options* options,
                             char** result_json, char** trace_json);

/* Audit. `selection` is a comma or space separated list of ids or "all";
 * `convention` is "left" or "right" (NULL = left). */
GGT_API ggt_status ggt_audit_check_ids(char** out);
GGT_API ggt_status ggt_audit_run(const char* selection, size_t cap, const char* convention, ggt_report** out);
GGT_API int ggt_report_exit_code(const ggt_report* r);
GGT_API size_t ggt_report_size(const ggt_report* r);
GGT_API ggt_status ggt_report_json(const ggt_report* r, int timing, char** out);
GGT_API ggt_status ggt_report_text(const ggt_report* r, char** out);
GGT_API void ggt_report_free(ggt_report* r);

/* Writes the object to `path`, or returns it in `out` when path is NULL. */
GGT_API ggt_status ggt_export(const char* id, const char* format, const char* path, char** out);

#ifdef __cplusplus
}
#endif

#endif
