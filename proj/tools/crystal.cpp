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

// crystal: command-line front end to the monocrystal C API.
//
//   crystal graph --rank 2 --k 1 --m 1 --format dot
//   crystal elements --rank 5 --k 3 --m 1 --format json
//   crystal decompose-tensor --rank 5 --p 3 --q 3
//   crystal decompose-product --rank 5 --p 3 --q 3 --m 2 --format text
//   crystal verify --n-max 4 --m-max 10
//
// Exit status: 0 success, 1 usage or resource error, 2 verification mismatch.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "monocrystal/monocrystal.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct Options {
  int rank = 2;
  int p = 1;
  int q = 1;
  int k = 1;
  std::int64_t m = 1;
  int n_max = 4;
  std::int64_t m_max = 10;
  bool timing = false;
  mc_format format = MC_FORMAT_TEXT;
  std::string output;
};

struct UsageError {
  std::string message;
};

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Session = std::unique_ptr<mc_session, Deleter<mc_session, mc_session_destroy>>;
using Document = std::unique_ptr<mc_document, Deleter<mc_document, mc_document_destroy>>;
using Graph = std::unique_ptr<mc_graph, Deleter<mc_graph, mc_graph_destroy>>;
using Product = std::unique_ptr<mc_product, Deleter<mc_product, mc_product_destroy>>;
using Tensor = std::unique_ptr<mc_tensor, Deleter<mc_tensor, mc_tensor_destroy>>;
using Report = std::unique_ptr<mc_verify_report, Deleter<mc_verify_report, mc_verify_destroy>>;

// Library failures other than domain errors are not the user's fault, but
// all of them end the command with status 1.
void check(mc_status status) {
  if (status != MC_OK) throw UsageError{std::string(mc_status_name(status)) + ": " + mc_last_error()};
}

void require_range(const char* flag, std::int64_t value, std::int64_t lo, std::int64_t hi) {
  if (value < lo || value > hi) {
    throw UsageError{std::string(flag) + " must be in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(value)};
  }
}

std::optional<std::uint64_t> budget_from_env() {
  const char* raw = std::getenv("CRYSTAL_VERTEX_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw UsageError{"CRYSTAL_VERTEX_BUDGET must be a positive integer, got '" + std::string(raw) + "'"};
  }
  return value;
}

Session open_session(const Options& o) {
  require_range("--rank", o.rank, 2, 64);
  mc_session* raw = nullptr;
  check(mc_session_create(o.rank, &raw));
  Session session(raw);
  if (auto budget = budget_from_env()) check(mc_session_set_vertex_budget(session.get(), *budget));
  return session;
}

void require_m(const Options& o) { require_range("--m", o.m, 1, 1'000'000); }

void emit(const Options& o, const Document& doc) {
  const std::string text(mc_document_data(doc.get()), mc_document_size(doc.get()));
  if (o.output.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError{"cannot open output file '" + o.output + "'"};
  file << text;
}

void require_format(const Options& o, bool dot_allowed) {
  if (o.format == MC_FORMAT_DOT && !dot_allowed) {
    throw UsageError{"--format dot is only available for the graph command"};
  }
}

int run_graph(const Options& o) {
  Session session = open_session(o);
  require_range("--k", o.k, 1, o.rank);
  require_m(o);
  mc_graph* raw = nullptr;
  check(mc_graph_fundamental(session.get(), o.k, o.m, &raw));
  Graph graph(raw);
  mc_document* doc = nullptr;
  check(mc_graph_render(graph.get(), o.format, &doc));
  emit(o, Document(doc));
  return kExitOk;
}

int run_elements(const Options& o) {
  Session session = open_session(o);
  require_range("--k", o.k, 1, 2 * o.rank);
  require_m(o);
  require_format(o, false);
  mc_document* doc = nullptr;
  check(mc_elements_render(session.get(), o.k, o.m, o.format, &doc));
  emit(o, Document(doc));
  return kExitOk;
}

int run_decompose_tensor(const Options& o) {
  Session session = open_session(o);
  require_range("--p", o.p, 1, o.rank);
  require_range("--q", o.q, 1, o.rank);
  require_format(o, false);
  mc_tensor* raw = nullptr;
  check(mc_tensor_decompose(session.get(), o.p, o.q, &raw));
  Tensor tensor(raw);
  mc_document* doc = nullptr;
  check(mc_tensor_render(tensor.get(), o.format, &doc));
  emit(o, Document(doc));
  return mc_tensor_agreement(tensor.get()) ? kExitOk : kExitMismatch;
}

int run_decompose_product(const Options& o) {
  Session session = open_session(o);
  require_range("--p", o.p, 1, o.rank);
  require_range("--q", o.q, 1, o.rank);
  require_m(o);
  require_format(o, false);
  mc_product* raw = nullptr;
  check(mc_product_decompose(session.get(), o.p, o.q, o.m, &raw));
  Product product(raw);
  mc_document* doc = nullptr;
  check(mc_product_render(product.get(), o.format, &doc));
  emit(o, Document(doc));
  return mc_product_agreement(product.get()) ? kExitOk : kExitMismatch;
}

int run_verify(const Options& o) {
  require_range("--n-max", o.n_max, 2, 8);
  require_range("--m-max", o.m_max, 1, 1'000);
  require_format(o, false);
  std::uint64_t budget = 1'000'000;
  if (auto env = budget_from_env()) budget = *env;
  mc_verify_report* raw = nullptr;
  check(mc_verify_range(o.n_max, o.m_max, budget, &raw));
  Report report(raw);
  mc_document* doc = nullptr;
  check(mc_verify_render(report.get(), o.format, o.timing ? 1 : 0, &doc));
  emit(o, Document(doc));
  return mc_verify_mismatch_count(report.get()) == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type C_n monomial crystals: graphs, products and their decompositions"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, mc_format> formats{
      {"text", MC_FORMAT_TEXT}, {"json", MC_FORMAT_JSON}, {"dot", MC_FORMAT_DOT}};
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text | json | dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("-o,--output", o.output, "write the document to a file instead of stdout");
  };

  auto* graph = app.add_subcommand("graph", "crystal graph of the closure of Y_k(m)");
  graph->add_option("--rank", o.rank, "rank n >= 2")->required();
  graph->add_option("--k", o.k, "1 <= k <= n")->required();
  graph->add_option("--m", o.m, "shift m >= 1 (default 1)");
  add_common(graph);

  auto* elements = app.add_subcommand("elements", "list the set M_k(m)");
  elements->add_option("--rank", o.rank, "rank n >= 2")->required();
  elements->add_option("--k", o.k, "1 <= k <= 2n")->required();
  elements->add_option("--m", o.m, "shift m >= 1 (default 1)");
  add_common(elements);

  auto* tensor = app.add_subcommand("decompose-tensor", "decompose B(Λp) ⊗ B(Λq)");
  tensor->add_option("--rank", o.rank, "rank n >= 2")->required();
  tensor->add_option("--p", o.p, "1 <= p <= n")->required();
  tensor->add_option("--q", o.q, "1 <= q <= n")->required();
  add_common(tensor);

  auto* product = app.add_subcommand("decompose-product", "decompose M(Y_p(m)) · M(Y_q(1))");
  product->add_option("--rank", o.rank, "rank n >= 2")->required();
  product->add_option("--p", o.p, "1 <= p <= n")->required();
  product->add_option("--q", o.q, "1 <= q <= n")->required();
  product->add_option("--m", o.m, "shift m >= 1 (default 1)");
  add_common(product);

  auto* verify = app.add_subcommand("verify", "brute force vs closed form over a parameter range");
  verify->add_option("--n-max", o.n_max, "largest rank (default 4)");
  verify->add_option("--m-max", o.m_max, "largest m (default 10)");
  verify->add_flag("--timing", o.timing, "include timings (output is then not reproducible)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*graph) return run_graph(o);
    if (*elements) return run_elements(o);
    if (*tensor) return run_decompose_tensor(o);
    if (*product) return run_decompose_product(o);
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "crystal: " << e.message << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
