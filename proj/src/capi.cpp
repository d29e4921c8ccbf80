// Copyright 2026 The monocrystal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "monocrystal/monocrystal.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "monocrystal/documents.hpp"
#include "monocrystal/errors.hpp"

namespace mc = monocrystal;

struct mc_session {
  mc::CartanType type;
  std::size_t vertex_budget = mc::kDefaultVertexBudget;
};

struct mc_graph {
  mc::FundamentalGraph graph;
};

struct mc_product {
  mc::ProductReport report;
};

struct mc_tensor {
  mc::TensorReport report;
};

struct mc_verify_report {
  mc::VerifyReport report;
};

struct mc_document {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

mc_status fail(mc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating library exceptions into status codes.
template <class Body>
mc_status guarded(Body&& body) noexcept {
  try {
    g_last_error.clear();
    return body();
  } catch (const mc::DomainError& e) {
    return fail(MC_ERR_DOMAIN, e.what());
  } catch (const mc::ResourceError& e) {
    return fail(MC_ERR_RESOURCE, e.what());
  } catch (const mc::ContractViolation& e) {
    return fail(MC_ERR_CONTRACT, e.what());
  } catch (const mc::InternalInvariantError& e) {
    return fail(MC_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MC_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(MC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MC_ERR_INTERNAL, "unknown exception");
  }
}

mc_status null_argument(const char* name) {
  return fail(MC_ERR_INVALID_ARGUMENT, std::string(name) + " must not be NULL");
}

bool to_doc_format(mc_format format, mc::DocFormat* out) {
  switch (format) {
    case MC_FORMAT_TEXT:
      *out = mc::DocFormat::kText;
      return true;
    case MC_FORMAT_JSON:
      *out = mc::DocFormat::kJson;
      return true;
    case MC_FORMAT_DOT:
      *out = mc::DocFormat::kDot;
      return true;
  }
  return false;
}

template <class Render>
mc_status render_to(mc_format format, mc_document** out, Render&& render) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  mc::DocFormat doc_format;
  if (!to_doc_format(format, &doc_format)) return fail(MC_ERR_INVALID_ARGUMENT, "unknown format");
  return guarded([&] {
    *out = new mc_document{render(doc_format)};
    return MC_OK;
  });
}

}  // namespace

extern "C" {

const char* mc_version(void) { return "1.0.0"; }

const char* mc_status_name(mc_status status) {
  switch (status) {
    case MC_OK:
      return "ok";
    case MC_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case MC_ERR_DOMAIN:
      return "domain error";
    case MC_ERR_RESOURCE:
      return "resource error";
    case MC_ERR_CONTRACT:
      return "contract violation";
    case MC_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* mc_last_error(void) { return g_last_error.c_str(); }

mc_status mc_session_create(int rank, mc_session** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new mc_session{mc::CartanType(rank)};
    return MC_OK;
  });
}

void mc_session_destroy(mc_session* session) { delete session; }

int mc_session_rank(const mc_session* session) {
  return session == nullptr ? 0 : session->type.rank();
}

mc_status mc_session_set_vertex_budget(mc_session* session, uint64_t budget) {
  if (session == nullptr) return null_argument("session");
  if (budget == 0) return fail(MC_ERR_DOMAIN, "vertex budget must be positive");
  session->vertex_budget = static_cast<std::size_t>(budget);
  return MC_OK;
}

uint64_t mc_session_vertex_budget(const mc_session* session) {
  return session == nullptr ? 0 : session->vertex_budget;
}

const char* mc_document_data(const mc_document* doc) {
  return doc == nullptr ? "" : doc->text.c_str();
}

size_t mc_document_size(const mc_document* doc) { return doc == nullptr ? 0 : doc->text.size(); }

void mc_document_destroy(mc_document* doc) { delete doc; }

mc_status mc_graph_fundamental(const mc_session* session, int k, int64_t m, mc_graph** out) {
  if (session == nullptr) return null_argument("session");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new mc_graph{mc::fundamental_graph(session->type, k, m, session->vertex_budget)};
    return MC_OK;
  });
}

size_t mc_graph_vertex_count(const mc_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.graph.size();
}

size_t mc_graph_edge_count(const mc_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.graph.edges().size();
}

mc_status mc_graph_edge(const mc_graph* graph, size_t index, size_t* source, int* label,
                        size_t* target) {
  if (graph == nullptr) return null_argument("graph");
  const auto& edges = graph->graph.graph.edges();
  if (index >= edges.size()) return fail(MC_ERR_DOMAIN, "edge index out of range");
  if (source != nullptr) *source = edges[index].source;
  if (label != nullptr) *label = edges[index].label;
  if (target != nullptr) *target = edges[index].target;
  return MC_OK;
}

mc_status mc_graph_render(const mc_graph* graph, mc_format format, mc_document** out) {
  if (graph == nullptr) return null_argument("graph");
  return render_to(format, out, [&](mc::DocFormat f) { return mc::render(graph->graph, f); });
}

void mc_graph_destroy(mc_graph* graph) { delete graph; }

mc_status mc_elements_count(const mc_session* session, int k, int64_t m, size_t* out) {
  if (session == nullptr) return null_argument("session");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = mc::MonomialCrystal(session->type).m_k_set(k, m).size();
    return MC_OK;
  });
}

mc_status mc_elements_render(const mc_session* session, int k, int64_t m, mc_format format,
                             mc_document** out) {
  if (session == nullptr) return null_argument("session");
  return render_to(format, out, [&](mc::DocFormat f) {
    return mc::render_elements(session->type, k, m, f);
  });
}

mc_status mc_product_decompose(const mc_session* session, int p, int q, int64_t m,
                               mc_product** out) {
  if (session == nullptr) return null_argument("session");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    const mc::ProductSpec spec{session->type.rank(), p, q, m};
    *out = new mc_product{mc::decompose_product(spec, session->vertex_budget)};
    return MC_OK;
  });
}

size_t mc_product_component_count(const mc_product* product) {
  return product == nullptr ? 0 : product->report.brute_force.components.size();
}

mc_status mc_product_component(const mc_product* product, size_t index, int* a, int* c,
                               size_t* size) {
  if (product == nullptr) return null_argument("product");
  const auto& components = product->report.brute_force.components;
  if (index >= components.size()) return fail(MC_ERR_DOMAIN, "component index out of range");
  return guarded([&] {
    const auto ac = mc::ac_of(components[index].lambda);
    if (!ac) return fail(MC_ERR_INTERNAL, "component weight is not Lambda_a + Lambda_c");
    if (a != nullptr) *a = ac->a;
    if (c != nullptr) *c = ac->c;
    if (size != nullptr) *size = components[index].size;
    return MC_OK;
  });
}

size_t mc_product_element_count(const mc_product* product) {
  return product == nullptr ? 0 : product->report.brute_force.total_size();
}

size_t mc_product_closed_form_count(const mc_product* product) {
  return product == nullptr ? 0 : product->report.closed_form.size();
}

mc_status mc_product_closed_form(const mc_product* product, size_t index, int* a, int* c) {
  if (product == nullptr) return null_argument("product");
  const auto& labels = product->report.closed_form;
  if (index >= labels.size()) return fail(MC_ERR_DOMAIN, "label index out of range");
  if (a != nullptr) *a = labels[index].a;
  if (c != nullptr) *c = labels[index].c;
  return MC_OK;
}

int mc_product_agreement(const mc_product* product) {
  if (product == nullptr) return 0;
  int result = 0;
  guarded([&] {
    result = product->report.agreement() ? 1 : 0;
    return MC_OK;
  });
  return result;
}

mc_status mc_product_render(const mc_product* product, mc_format format, mc_document** out) {
  if (product == nullptr) return null_argument("product");
  return render_to(format, out, [&](mc::DocFormat f) { return mc::render(product->report, f); });
}

void mc_product_destroy(mc_product* product) { delete product; }

mc_status mc_tensor_decompose(const mc_session* session, int p, int q, mc_tensor** out) {
  if (session == nullptr) return null_argument("session");
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    *out = new mc_tensor{mc::decompose_tensor(session->type, p, q)};
    return MC_OK;
  });
}

size_t mc_tensor_component_count(const mc_tensor* tensor) {
  return tensor == nullptr ? 0 : tensor->report.closed_form.size();
}

mc_status mc_tensor_component(const mc_tensor* tensor, size_t index, int* a, int* c) {
  if (tensor == nullptr) return null_argument("tensor");
  const auto& labels = tensor->report.closed_form;
  if (index >= labels.size()) return fail(MC_ERR_DOMAIN, "label index out of range");
  if (a != nullptr) *a = labels[index].a;
  if (c != nullptr) *c = labels[index].c;
  return MC_OK;
}

int mc_tensor_agreement(const mc_tensor* tensor) {
  if (tensor == nullptr) return 0;
  int result = 0;
  guarded([&] {
    result = tensor->report.agreement() ? 1 : 0;
    return MC_OK;
  });
  return result;
}

mc_status mc_tensor_render(const mc_tensor* tensor, mc_format format, mc_document** out) {
  if (tensor == nullptr) return null_argument("tensor");
  return render_to(format, out, [&](mc::DocFormat f) { return mc::render(tensor->report, f); });
}

void mc_tensor_destroy(mc_tensor* tensor) { delete tensor; }

mc_status mc_verify_range(int n_max, int64_t m_max, uint64_t vertex_budget,
                          mc_verify_report** out) {
  if (out == nullptr) return null_argument("out");
  *out = nullptr;
  if (vertex_budget == 0) return fail(MC_ERR_DOMAIN, "vertex budget must be positive");
  return guarded([&] {
    *out = new mc_verify_report{
        mc::verify_range(n_max, m_max, static_cast<std::size_t>(vertex_budget))};
    return MC_OK;
  });
}

size_t mc_verify_cell_count(const mc_verify_report* report) {
  return report == nullptr ? 0 : report->report.cells.size();
}

size_t mc_verify_mismatch_count(const mc_verify_report* report) {
  return report == nullptr ? 0 : report->report.mismatches();
}

mc_status mc_verify_render(const mc_verify_report* report, mc_format format, int include_timing,
                           mc_document** out) {
  if (report == nullptr) return null_argument("report");
  return render_to(format, out, [&](mc::DocFormat f) {
    return mc::render(report->report, f, include_timing != 0);
  });
}

void mc_verify_destroy(mc_verify_report* report) { delete report; }

}  // extern "C"
