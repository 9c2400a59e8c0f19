// Copyright 2026 The Pastel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PASTEL_PASTEL_H
#define PASTEL_PASTEL_H

#include <stddef.h>

#if defined(_WIN32)
#define PASTEL_API __declspec(dllexport)
#else
#define PASTEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values are stable. */
typedef enum pastel_status {
    PASTEL_OK = 0,
    PASTEL_PARSE_ERROR = 1,
    PASTEL_DUPLICATE_ID = 2,
    PASTEL_BAD_ROTATION = 3,
    PASTEL_NOT_CONNECTED = 4,
    PASTEL_EULER_MISMATCH = 5,
    PASTEL_NOT_ST_GRAPH = 6,
    PASTEL_HAS_DIRECTED_CYCLE = 7,
    PASTEL_FACE_NOT_GLOBULAR = 8,
    PASTEL_MIRRORED_EMBEDDING = 9,
    PASTEL_NOT_COMPARABLE = 10,
    PASTEL_NOT_A_PARTIAL_ORDER = 11,
    PASTEL_NOT_ADMISSIBLE = 12,
    PASTEL_NOT_GLOBULAR_SUBGRAPH = 13,
    PASTEL_NOT_WIDE_GENERATED = 14,
    PASTEL_NOT_INCLUDED = 15,
    PASTEL_NOT_COMPLETE = 16,
    PASTEL_NOT_MINIMAL_COMPLETE = 17,
    PASTEL_INVALID_LABELING = 18,
    PASTEL_BAD_INCLUSION = 19,
    PASTEL_NOT_TWO_CONNECTED = 20,
    PASTEL_TOO_FEW_FACES = 21,
    PASTEL_HYPOTHESIS_VIOLATED = 22,
    PASTEL_SEARCH_EXHAUSTED = 23,
    PASTEL_ORACLE_FAILURE = 24,
    PASTEL_INCOMPATIBLE = 25,
    PASTEL_INVALID_CERTIFICATE = 26,
    PASTEL_INTERCHANGE_VIOLATION = 27,
    PASTEL_INVALID_ARGUMENT = 28,
    PASTEL_LIMIT_EXCEEDED = 29,
    PASTEL_INTERNAL = 99
} pastel_status;

typedef struct pastel_graph pastel_graph;
typedef struct pastel_diagram pastel_diagram;

/* Every char** output is a NUL-terminated string owned by the caller and
 * released with pastel_string_free. Outputs are left untouched on failure. */

PASTEL_API const char* pastel_version(void);
/* "Ok", "ParseError", ...; "Unknown" for other values. */
PASTEL_API const char* pastel_status_name(int status);
/* Message of the last failure on this thread; empty after a success. */
PASTEL_API const char* pastel_last_error(void);
PASTEL_API void pastel_string_free(char* s);

/* Catalog: names one per line, graph text by name. */
PASTEL_API pastel_status pastel_catalog_names(char** out);
PASTEL_API int pastel_catalog_contains(const char* name);
/* Built-in tabulated 2-categories: "chain" and "crossed-module". */
PASTEL_API pastel_status pastel_catalog_twocat(const char* name, char** out);

/* Graphs. Parsing validates the rotation system; globularity is checked
 * by pastel_graph_check and by every operation that needs it. */
PASTEL_API pastel_status pastel_graph_parse(const char* text, pastel_graph** out);
PASTEL_API pastel_status pastel_graph_catalog(const char* name, pastel_graph** out);
PASTEL_API void pastel_graph_free(pastel_graph* g);
PASTEL_API pastel_status pastel_graph_to_text(const pastel_graph* g, char** out);
PASTEL_API int pastel_graph_num_vertices(const pastel_graph* g);
PASTEL_API int pastel_graph_num_edges(const pastel_graph* g);
/* Interior faces only. */
PASTEL_API int pastel_graph_num_faces(const pastel_graph* g);
/* Source, target, dom and cod of a globular graph. */
PASTEL_API pastel_status pastel_graph_check(const pastel_graph* g, char** report);
/* One line per face: boundary walk, and dom => cod for interior faces. */
PASTEL_API pastel_status pastel_graph_faces(const pastel_graph* g, char** out);
/* The st-paths in order, then the Hasse diagram of the path order in DOT. */
PASTEL_API pastel_status pastel_graph_paths(const pastel_graph* g, char** out);
/* Simplex table of the nerve up to max_dim (all when negative); with
 * `marked` each simplex is printed as its marked subgraph key. */
PASTEL_API pastel_status pastel_graph_nerve(const pastel_graph* g, int max_dim, int marked,
                                            char** out);
/* The nerve as JSON. */
PASTEL_API pastel_status pastel_graph_nerve_json(const pastel_graph* g, char** out);
/* Action of a simplicial operator, given as comma-separated images of
 * 0..k, on a marked subgraph key; prints the resulting key. */
PASTEL_API pastel_status pastel_graph_act(const pastel_graph* g, const char* marked_key,
                                          const char* op, char** out);
/* format: "dot", "tikz" or "svg". */
PASTEL_API pastel_status pastel_graph_render(const pastel_graph* g, const char* format,
                                             char** out);

/* Pasting diagrams. */
PASTEL_API pastel_status pastel_diagram_parse(const char* text, pastel_diagram** out);
/* name: "min", "min-complete" or "max". */
PASTEL_API pastel_status pastel_diagram_named(const pastel_graph* g, const char* name,
                                              pastel_diagram** out);
PASTEL_API void pastel_diagram_free(pastel_diagram* d);
PASTEL_API pastel_status pastel_diagram_to_text(const pastel_diagram* d, char** out);
PASTEL_API int pastel_diagram_num_members(const pastel_diagram* d);
/* Members and the complete / subdivision-closed / wide-generated flags. */
PASTEL_API pastel_status pastel_diagram_check(const pastel_diagram* d, char** out);
/* Simplex table of the nerve of the diagram. */
PASTEL_API pastel_status pastel_diagram_nerve(const pastel_diagram* d, char** out);
/* Members of sigma hc pi that are not in sigma, one per line; the result
 * diagram goes to *out when out is not NULL. */
PASTEL_API pastel_status pastel_diagram_hc(const pastel_diagram* sigma, const pastel_diagram* pi,
                                           pastel_diagram** out, char** report);
/* Mapping space of C[d] between two vertices, as a table or JSON. */
PASTEL_API pastel_status pastel_diagram_hom(const pastel_diagram* d, const char* x, const char* y,
                                            int json, char** out);

/* Anodyne certificates for sigma -> pi. */
PASTEL_API pastel_status pastel_certificate_build(const pastel_diagram* sigma,
                                                  const pastel_diagram* pi, char** out);
/* PASTEL_OK with "valid" in the report, PASTEL_INVALID_CERTIFICATE with the
 * violation otherwise. */
PASTEL_API pastel_status pastel_certificate_validate(const pastel_diagram* sigma,
                                                     const pastel_diagram* pi,
                                                     const char* certificate, char** report);

/* Targets of labelings are nerves of 2-categories truncated at `dim`:
 * a tabulated 2-category file, or one of "chain", "crossed-module" and
 * "paths" (the path 2-category of the graph). */
/* Checks a labeling and prints the classified functor on C[Sigma_min^c]. */
PASTEL_API pastel_status pastel_label(const pastel_graph* g, const char* labeling,
                                      const char* target, int dim, char** out);
/* Extends the functor of a labeling to C[Pi_max] and prints it. */
PASTEL_API pastel_status pastel_extend(const pastel_graph* g, const char* labeling,
                                       const char* target, int dim, char** out);
/* Composite 2-cell of a labeling with cell names in a 2-category file
 * (tabulated or a computad). */
PASTEL_API pastel_status pastel_paste(const pastel_graph* g, const char* labeling,
                                      const char* twocat, char** out);

#ifdef __cplusplus
}
#endif

#endif
