/*
 * Copyright 2026 The monocrystal Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the monocrystal library.
 *
 * All objects are opaque handles created by a *_create / *_decompose call
 * and released with the matching *_destroy (which accepts NULL). Functions
 * returning mc_status report failures through it; the message of the most
 * recent failure on the calling thread is available from mc_last_error().
 * Handles are immutable after creation and may be shared between threads.
 */

#ifndef MONOCRYSTAL_H_
#define MONOCRYSTAL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MONOCRYSTAL_BUILDING)
#    define MC_API __declspec(dllexport)
#  else
#    define MC_API __declspec(dllimport)
#  endif
#else
#  define MC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mc_status {
  MC_OK = 0,
  MC_ERR_INVALID_ARGUMENT = 1, /* null handle or output pointer, unknown enum */
  MC_ERR_DOMAIN = 2,           /* parameter outside its documented range */
  MC_ERR_RESOURCE = 3,         /* vertex budget exceeded */
  MC_ERR_CONTRACT = 4,         /* precondition violated */
  MC_ERR_INTERNAL = 5          /* library invariant failed */
} mc_status;

typedef enum mc_format {
  MC_FORMAT_TEXT = 0,
  MC_FORMAT_JSON = 1,
  MC_FORMAT_DOT = 2 /* graphs only */
} mc_format;

typedef struct mc_session mc_session;
typedef struct mc_graph mc_graph;
typedef struct mc_product mc_product;
typedef struct mc_tensor mc_tensor;
typedef struct mc_verify_report mc_verify_report;
typedef struct mc_document mc_document;

MC_API const char* mc_version(void);
MC_API const char* mc_status_name(mc_status status);
/* Message of the last failed call on this thread; "" if none. */
MC_API const char* mc_last_error(void);

/* ---- sessions: rank n >= 2 and a closure vertex budget ---- */
MC_API mc_status mc_session_create(int rank, mc_session** out);
MC_API void mc_session_destroy(mc_session* session);
MC_API int mc_session_rank(const mc_session* session);
MC_API mc_status mc_session_set_vertex_budget(mc_session* session, uint64_t budget);
MC_API uint64_t mc_session_vertex_budget(const mc_session* session);

/* ---- owned text documents ---- */
MC_API const char* mc_document_data(const mc_document* doc);
MC_API size_t mc_document_size(const mc_document* doc);
MC_API void mc_document_destroy(mc_document* doc);

/* ---- crystal graph of Y_k(m), 1 <= k <= n ---- */
MC_API mc_status mc_graph_fundamental(const mc_session* session, int k, int64_t m,
                                      mc_graph** out);
MC_API size_t mc_graph_vertex_count(const mc_graph* graph);
MC_API size_t mc_graph_edge_count(const mc_graph* graph);
MC_API mc_status mc_graph_edge(const mc_graph* graph, size_t index, size_t* source, int* label,
                               size_t* target);
MC_API mc_status mc_graph_render(const mc_graph* graph, mc_format format, mc_document** out);
MC_API void mc_graph_destroy(mc_graph* graph);

/* ---- the sets M_k(m), 1 <= k <= 2n ---- */
MC_API mc_status mc_elements_count(const mc_session* session, int k, int64_t m, size_t* out);
MC_API mc_status mc_elements_render(const mc_session* session, int k, int64_t m,
                                    mc_format format, mc_document** out);

/* ---- M(Y_p(m)) . M(Y_q(1)): brute force plus closed form ---- */
MC_API mc_status mc_product_decompose(const mc_session* session, int p, int q, int64_t m,
                                      mc_product** out);
MC_API size_t mc_product_component_count(const mc_product* product);
/* i-th brute-force component B(Lambda_a + Lambda_c) of the given size. */
MC_API mc_status mc_product_component(const mc_product* product, size_t index, int* a, int* c,
                                      size_t* size);
MC_API size_t mc_product_element_count(const mc_product* product);
MC_API size_t mc_product_closed_form_count(const mc_product* product);
MC_API mc_status mc_product_closed_form(const mc_product* product, size_t index, int* a, int* c);
/* 1 if brute force and closed form agree, 0 otherwise (or on NULL). */
MC_API int mc_product_agreement(const mc_product* product);
MC_API mc_status mc_product_render(const mc_product* product, mc_format format,
                                   mc_document** out);
MC_API void mc_product_destroy(mc_product* product);

/* ---- B(Lambda_p) (x) B(Lambda_q): closed form vs tableaux enumeration ---- */
MC_API mc_status mc_tensor_decompose(const mc_session* session, int p, int q, mc_tensor** out);
MC_API size_t mc_tensor_component_count(const mc_tensor* tensor);
/* i-th label of the closed form. */
MC_API mc_status mc_tensor_component(const mc_tensor* tensor, size_t index, int* a, int* c);
MC_API int mc_tensor_agreement(const mc_tensor* tensor);
MC_API mc_status mc_tensor_render(const mc_tensor* tensor, mc_format format, mc_document** out);
MC_API void mc_tensor_destroy(mc_tensor* tensor);

/* ---- exhaustive check over 2 <= n <= n_max, 1 <= p,q <= n, 1 <= m <= m_max ---- */
MC_API mc_status mc_verify_range(int n_max, int64_t m_max, uint64_t vertex_budget,
                                 mc_verify_report** out);
MC_API size_t mc_verify_cell_count(const mc_verify_report* report);
MC_API size_t mc_verify_mismatch_count(const mc_verify_report* report);
MC_API mc_status mc_verify_render(const mc_verify_report* report, mc_format format,
                                  int include_timing, mc_document** out);
MC_API void mc_verify_destroy(mc_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* MONOCRYSTAL_H_ */
