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

// Text / JSON / DOT documents for graphs, element listings, decompositions
// and verification reports. Every document ends with a newline and is a pure
// function of its inputs.

#ifndef MONOCRYSTAL_DOCUMENTS_HPP_
#define MONOCRYSTAL_DOCUMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monocrystal/crystal_graph.hpp"
#include "monocrystal/monomial.hpp"
#include "monocrystal/product.hpp"
#include "monocrystal/tableaux.hpp"

namespace monocrystal {

enum class DocFormat { kText, kJson, kDot };

struct FundamentalGraph {
  CartanType type;
  Monomial seed;
  CrystalGraph<Monomial> graph;
};

// Closure of Y_k(m), 1 <= k <= n.
FundamentalGraph fundamental_graph(const CartanType& type, int k, std::int64_t m,
                                   std::size_t vertex_budget = kDefaultVertexBudget);
std::string render(const FundamentalGraph& g, DocFormat format);

std::string render_elements(const CartanType& type, int k, std::int64_t m, DocFormat format);

struct TensorReport {
  CartanType type;
  int p;
  int q;
  std::vector<HighestWeightPair> oracle;
  std::vector<AcPair> closed_form;

  std::vector<AcPair> oracle_labels() const;
  bool agreement() const { return oracle_labels() == closed_form; }
};

TensorReport decompose_tensor(const CartanType& type, int p, int q);
std::string render(const TensorReport& r, DocFormat format);

struct ProductReport {
  ProductSpec spec;
  Decomposition<Monomial> brute_force;
  std::vector<ComponentPrediction> predictions;
  std::vector<AcPair> closed_form;

  bool agreement() const { return ac_multiset(brute_force) == closed_form; }
};

ProductReport decompose_product(const ProductSpec& spec,
                                std::size_t vertex_budget = kDefaultVertexBudget);
// JSON: {"n","p","q","m","components":[{"a","c","lambda","size","hw"}],
//        "elements","closed_form":[...],"predictions":[...],"agreement"}.
nlohmann::json to_json_document(const ProductReport& r);
std::string render(const ProductReport& r, DocFormat format);

// JSON Lines, one object per cell and a final summary. Timings change from
// run to run, so they are emitted only on request.
std::string render(const VerifyReport& r, DocFormat format, bool include_timing = false);

}  // namespace monocrystal

#endif  // MONOCRYSTAL_DOCUMENTS_HPP_
