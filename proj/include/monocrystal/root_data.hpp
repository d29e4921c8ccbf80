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

// Cartan datum of type C_n and the weight lattice P = sum_i Z Lambda_i.
//
// Weights are stored in fundamental-weight coordinates, so <h_i, lambda> is a
// coordinate read. The orthonormal (epsilon) coordinates are related by
// Lambda_i = eps_1 + ... + eps_i and are computed on demand.

#ifndef MONOCRYSTAL_ROOT_DATA_HPP_
#define MONOCRYSTAL_ROOT_DATA_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace monocrystal {

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> lambda) : coeffs_(std::move(lambda)) {}

  static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }
  // Inverse of to_epsilon: c_i = e_i - e_{i+1}, e_{n+1} = 0.
  static Weight from_epsilon(std::span<const std::int64_t> eps);

  int rank() const noexcept { return static_cast<int>(coeffs_.size()); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  // <h_i, lambda>, 1-based i.
  std::int64_t pairing(int i) const;
  bool dominant() const noexcept;
  std::vector<std::int64_t> to_epsilon() const;

  // "2Λ3", "Λ2+Λ4", "-Λ1+Λ2", "0".
  std::string to_text() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  void require_same_rank(const Weight& other) const;

  std::vector<std::int64_t> coeffs_;
};

void to_json(nlohmann::json& j, const Weight& w);
void from_json(const nlohmann::json& j, Weight& w);

class CartanType {
 public:
  // Throws DomainError unless rank >= 2.
  explicit CartanType(int rank);

  int rank() const noexcept { return rank_; }
  bool valid_index(int i) const noexcept { return i >= 1 && i <= rank_; }
  void check_index(int i, const char* what = "index") const;

  // a_ij: 2 on the diagonal, -1 on neighbours except a_{n-1,n} = -2.
  int entry(int i, int j) const;

  // Lambda_i for 1 <= i <= n; Lambda_0 is the zero weight.
  Weight fundamental(int i) const;
  // alpha_i in Lambda coordinates: coordinate j is a_{ji}.
  Weight simple_root(int i) const;
  // Lambda_a + Lambda_c with Lambda_0 = 0.
  Weight fundamental_sum(int a, int c) const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  int rank_;
};

}  // namespace monocrystal

#endif  // MONOCRYSTAL_ROOT_DATA_HPP_
