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

#include "monocrystal/documents.hpp"

#include <algorithm>
#include <sstream>

#include "monocrystal/errors.hpp"

namespace monocrystal {
namespace {

[[noreturn]] void unsupported(DocFormat format, const char* what) {
  const char* name = format == DocFormat::kDot ? "dot" : format == DocFormat::kJson ? "json" : "text";
  throw DomainError(std::string("format '") + name + "' is not available for " + what);
}

std::vector<std::int64_t> coeff_vector(const Weight& w) {
  return {w.coeffs().begin(), w.coeffs().end()};
}

nlohmann::json ac_list(const std::vector<AcPair>& labels) {
  nlohmann::json out = nlohmann::json::array();
  for (const AcPair& ac : labels) out.push_back({ac.a, ac.c});
  return out;
}

std::string ac_line(const std::vector<AcPair>& labels) {
  std::string out;
  for (const AcPair& ac : labels) {
    if (!out.empty()) out += ' ';
    out += "B(" + ac_text(ac) + ")";
  }
  return out.empty() ? "-" : out;
}

}  // namespace

FundamentalGraph fundamental_graph(const CartanType& type, int k, std::int64_t m,
                                   std::size_t vertex_budget) {
  type.check_index(k, "k");
  const Monomial seed = Monomial::y(k, m);
  auto graph = generate_closure(MonomialCrystal(type), {seed}, vertex_budget);
  return {type, seed, std::move(graph)};
}

std::string render(const FundamentalGraph& g, DocFormat format) {
  const MonomialCrystal crystal(g.type);
  switch (format) {
    case DocFormat::kDot:
      return export_graph(crystal, g.graph, ExportFormat::kDot);
    case DocFormat::kJson:
      return export_graph(crystal, g.graph, ExportFormat::kJson);
    case DocFormat::kText:
      break;
  }
  std::ostringstream out;
  out << "crystal graph n=" << g.type.rank() << " seed=" << g.seed.to_text()
      << " vertices=" << g.graph.size() << " edges=" << g.graph.edges().size() << '\n';
  for (std::size_t v = 0; v < g.graph.size(); ++v) {
    out << v << ' ' << g.graph.vertices()[v].to_text() << '\n';
  }
  for (const GraphEdge& e : g.graph.edges()) {
    out << e.source << " -" << e.label << "-> " << e.target << '\n';
  }
  return out.str();
}

std::string render_elements(const CartanType& type, int k, std::int64_t m, DocFormat format) {
  const MonomialCrystal crystal(type);
  const auto elements = crystal.m_k_set(k, m);
  if (format == DocFormat::kDot) unsupported(format, "elements");
  if (format == DocFormat::kJson) {
    nlohmann::json doc{{"n", type.rank()}, {"k", k}, {"m", m}, {"count", elements.size()},
                       {"elements", elements}};
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << "M_" << k << "(" << m << ") n=" << type.rank() << " count=" << elements.size() << '\n';
  for (const Monomial& y : elements) out << y.to_text() << '\n';
  return out.str();
}

std::vector<AcPair> TensorReport::oracle_labels() const {
  std::vector<AcPair> out;
  for (const auto& pair : oracle) {
    auto ac = ac_of(pair.lambda);
    if (!ac) throw InternalInvariantError("tensor highest weight is not Lambda_a + Lambda_c");
    out.push_back(*ac);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TensorReport decompose_tensor(const CartanType& type, int p, int q) {
  auto oracle = tensor_highest_weights(type, p, q);
  auto closed = tensor_decomposition_closed_form(type, p, q);
  return {type, p, q, std::move(oracle), std::move(closed)};
}

std::string render(const TensorReport& r, DocFormat format) {
  if (format == DocFormat::kDot) unsupported(format, "decompose-tensor");
  if (format == DocFormat::kJson) {
    nlohmann::json oracle = nlohmann::json::array();
    for (const auto& pair : r.oracle) {
      const AcPair ac = *ac_of(pair.lambda);
      oracle.push_back({{"a", ac.a}, {"c", ac.c}, {"lambda", coeff_vector(pair.lambda)},
                        {"hw", nlohmann::json::array({nlohmann::json(pair.left), nlohmann::json(pair.right)})}});
    }
    nlohmann::json doc{{"n", r.type.rank()}, {"p", r.p},
                       {"q", r.q},           {"components", std::move(oracle)},
                       {"closed_form", ac_list(r.closed_form)},
                       {"agreement", r.agreement()}};
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << "decompose-tensor n=" << r.type.rank() << " p=" << r.p << " q=" << r.q << '\n';
  out << "closed-form: " << ac_line(r.closed_form) << '\n';
  out << "highest-weight pairs: " << r.oracle.size() << '\n';
  for (const auto& pair : r.oracle) {
    out << "  " << pair.left.to_text() << " ⊗ " << pair.right.to_text() << "  B("
        << pair.lambda.to_text() << ")\n";
  }
  out << "agreement=" << (r.agreement() ? "true" : "false") << '\n';
  return out.str();
}

ProductReport decompose_product(const ProductSpec& spec, std::size_t vertex_budget) {
  spec.validate();
  auto brute = decompose_product_bruteforce(spec, vertex_budget);
  auto predictions = product_predictions(spec.type(), spec.p, spec.q);
  auto closed = product_decomposition_closed_form(spec);
  return {spec, std::move(brute), std::move(predictions), std::move(closed)};
}

nlohmann::json to_json_document(const ProductReport& r) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : r.brute_force.components) {
    nlohmann::json entry;
    if (auto ac = ac_of(c.lambda)) {
      entry["a"] = ac->a;
      entry["c"] = ac->c;
    }
    entry["lambda"] = coeff_vector(c.lambda);
    entry["size"] = c.size;
    entry["hw"] = c.witness.to_text();
    components.push_back(std::move(entry));
  }
  nlohmann::json predictions = nlohmann::json::array();
  for (const auto& p : r.predictions) {
    nlohmann::json entry{{"a", p.ac.a}, {"c", p.ac.c}, {"family", family_name(p.family)}};
    entry["threshold"] = p.threshold ? nlohmann::json(*p.threshold) : nlohmann::json(nullptr);
    entry["present"] = p.appears_at(r.spec.m);
    predictions.push_back(std::move(entry));
  }
  return {{"n", r.spec.rank},
          {"p", r.spec.p},
          {"q", r.spec.q},
          {"m", r.spec.m},
          {"components", std::move(components)},
          {"elements", r.brute_force.total_size()},
          {"closed_form", ac_list(r.closed_form)},
          {"predictions", std::move(predictions)},
          {"agreement", r.agreement()}};
}

std::string render(const ProductReport& r, DocFormat format) {
  if (format == DocFormat::kDot) unsupported(format, "decompose-product");
  if (format == DocFormat::kJson) return to_json_document(r).dump() + "\n";
  std::ostringstream out;
  out << "decompose-product n=" << r.spec.rank << " p=" << r.spec.p << " q=" << r.spec.q
      << " m=" << r.spec.m << '\n';
  out << "brute-force components: " << r.brute_force.components.size() << '\n';
  for (const auto& c : r.brute_force.components) {
    out << "  B(" << c.lambda.to_text() << ") size=" << c.size << " hw=" << c.witness.to_text()
        << '\n';
  }
  out << "closed-form components: " << r.closed_form.size() << '\n';
  for (const auto& p : r.predictions) {
    if (!p.appears_at(r.spec.m)) continue;
    out << "  B(" << ac_text(p.ac) << ") " << family_name(p.family);
    if (p.threshold) out << " threshold=" << *p.threshold;
    out << '\n';
  }
  out << "elements=" << r.brute_force.total_size() << '\n';
  out << "agreement=" << (r.agreement() ? "true" : "false") << '\n';
  return out.str();
}

std::string render(const VerifyReport& r, DocFormat format, bool include_timing) {
  if (format == DocFormat::kDot) unsupported(format, "verify");
  std::ostringstream out;
  if (format == DocFormat::kJson) {
    for (const CellResult& cell : r.cells) {
      nlohmann::json line{{"n", cell.spec.rank},
                          {"p", cell.spec.p},
                          {"q", cell.spec.q},
                          {"m", cell.spec.m},
                          {"elements", cell.elements},
                          {"brute_force", ac_list(cell.brute_force)},
                          {"closed_form", ac_list(cell.closed_form)},
                          {"match", cell.match()}};
      if (include_timing) line["millis"] = cell.millis;
      out << line.dump() << '\n';
    }
    nlohmann::json summary{{"summary", true},
                           {"n_max", r.n_max},
                           {"m_max", r.m_max},
                           {"cells", r.cells.size()},
                           {"mismatches", r.mismatches()}};
    if (include_timing) summary["millis"] = r.millis;
    out << summary.dump() << '\n';
    return out.str();
  }
  for (const CellResult& cell : r.cells) {
    out << "n=" << cell.spec.rank << " p=" << cell.spec.p << " q=" << cell.spec.q
        << " m=" << cell.spec.m << " elements=" << cell.elements
        << " brute=[" << ac_line(cell.brute_force) << "] closed=[" << ac_line(cell.closed_form)
        << "] " << (cell.match() ? "ok" : "MISMATCH");
    if (include_timing) out << " ms=" << cell.millis;
    out << '\n';
  }
  out << "cells=" << r.cells.size() << " mismatches=" << r.mismatches();
  if (include_timing) out << " ms=" << r.millis;
  out << '\n';
  return out.str();
}

}  // namespace monocrystal
