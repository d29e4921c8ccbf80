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

// Entrywise products M(Y_p(m)) . M(Y_q(1)) of fundamental monomial crystals:
// construction, brute-force decomposition, and the closed-form predictors for
// both the tensor product and the monomial product.

#ifndef MONOCRYSTAL_PRODUCT_HPP_
#define MONOCRYSTAL_PRODUCT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "monocrystal/crystal_graph.hpp"
#include "monocrystal/monomial.hpp"
#include "monocrystal/root_data.hpp"

namespace monocrystal {

struct ProductSpec {
  int rank = 2;
  int p = 1;
  int q = 1;
  std::int64_t m = 1;

  // Throws DomainError unless rank >= 2, 1 <= p, q <= rank and m >= 1.
  void validate() const;
  CartanType type() const { return CartanType(rank); }
};

// Label (a, c) of B(Lambda_a + Lambda_c), 0 <= a <= c <= n, Lambda_0 = 0.
struct AcPair {
  int a = 0;
  int c = 0;

  friend bool operator==(const AcPair&, const AcPair&) = default;
  friend auto operator<=>(const AcPair&, const AcPair&) = default;
};

// Recovers (a, c) from a weight of the form Lambda_a + Lambda_c.
std::optional<AcPair> ac_of(const Weight& lambda);
std::string ac_text(AcPair ac);

enum class Family { kAlways, kEvenGap, kZeroGap };
const char* family_name(Family f);

struct ComponentPrediction {
  AcPair ac;
  Family family = Family::kAlways;
  // Smallest m at which the component appears; empty for kAlways.
  std::optional<std::int64_t> threshold;

  bool appears_at(std::int64_t m) const { return !threshold || m >= *threshold; }
};

// Highest-weight labels of B(Lambda_p) (x) B(Lambda_q): all (a, c) with
//   0 <= a <= c <= n, a+q <= p+c, a+p <= q+c, (p+q)-(a+c) in 2Z_{>=0},
//   a <= p, (p+q+c-a)/2 <= n.
// Sorted; each label occurs once.
std::vector<AcPair> tensor_decomposition_closed_form(const CartanType& type, int p, int q);

// Every component the product can contain for some m, with its family and
// appearance threshold. Sorted by label.
std::vector<ComponentPrediction> product_predictions(const CartanType& type, int p, int q);

// Labels present in M(Y_p(m)) . M(Y_q(1)), sorted.
std::vector<AcPair> product_decomposition_closed_form(const ProductSpec& spec);

// The zero-gap family with the alternative region 0 <= a < p < c <= n.
std::vector<AcPair> zero_gap_family_strict_region(const CartanType& type, int p, int q);

// Closure of Y_k(m) under e_i / f_i, checked against M_k(m). Sorted.
std::vector<Monomial> fundamental_crystal(const CartanType& type, int k, std::int64_t m,
                                          std::size_t vertex_budget = kDefaultVertexBudget);

struct Factorization {
  std::size_t left;   // index into ProductSet::left_factors
  std::size_t right;  // index into ProductSet::right_factors
};

// {M1 . M2} with every factorization recorded.
struct ProductSet {
  std::vector<Monomial> left_factors;
  std::vector<Monomial> right_factors;
  std::set<Monomial> elements;
  std::map<Monomial, std::vector<Factorization>> factorizations;
};

// All products M_1 . M_2 . ... with M_j drawn from factors[j].
std::set<Monomial> product_of(const std::vector<std::vector<Monomial>>& factors);

// M(Y_p(m)) . M(Y_q(1)). Throws InternalInvariantError if it is not closed.
ProductSet product_set(const ProductSpec& spec,
                       std::size_t vertex_budget = kDefaultVertexBudget);

// decompose_set of the product set; additionally checks that every
// factorization of a highest-weight product has left factor Y_p(m).
Decomposition<Monomial> decompose_product_bruteforce(
    const ProductSpec& spec, std::size_t vertex_budget = kDefaultVertexBudget);

// M(Y_p(left_shift)) . M(Y_q(right_shift)) for left_shift >= right_shift,
// computed on the normalized product with right shift 1 and translated back.
Decomposition<Monomial> decompose_product_shifted(int rank, int p, std::int64_t left_shift, int q,
                                                  std::int64_t right_shift,
                                                  std::size_t vertex_budget = kDefaultVertexBudget);

// Sorted labels of a decomposition. Throws InternalInvariantError if a
// highest weight is not of the form Lambda_a + Lambda_c.
std::vector<AcPair> ac_multiset(const Decomposition<Monomial>& d);

struct CellResult {
  ProductSpec spec;
  std::vector<AcPair> brute_force;
  std::vector<AcPair> closed_form;
  std::size_t elements = 0;
  double millis = 0.0;

  bool match() const { return brute_force == closed_form; }
};

struct VerifyReport {
  int n_max = 2;
  std::int64_t m_max = 1;
  std::vector<CellResult> cells;  // sorted by (n, p, q, m)
  double millis = 0.0;

  std::size_t mismatches() const;
};

// Brute force vs closed form over 2 <= n <= n_max, 1 <= p, q <= n, 1 <= m <= m_max.
VerifyReport verify_range(int n_max, std::int64_t m_max,
                          std::size_t vertex_budget = kDefaultVertexBudget);

}  // namespace monocrystal

#endif  // MONOCRYSTAL_PRODUCT_HPP_
