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

// Kashiwara-Nakashima column model for type C_n: the letter crystal
// B(Lambda_1), admissible columns realizing B(Lambda_N), and enumeration of
// highest-weight pairs in B(Lambda_p) (x) B(Lambda_q).

#ifndef MONOCRYSTAL_TABLEAUX_HPP_
#define MONOCRYSTAL_TABLEAUX_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "monocrystal/alphabet.hpp"
#include "monocrystal/crystal_graph.hpp"
#include "monocrystal/root_data.hpp"

namespace monocrystal {

// The path 1 -1-> 2 -2-> ... -(n-1)-> n -n-> n̄ -(n-1)-> ... -2-> 2̄ -1-> 1̄.
class LetterCrystal {
 public:
  using element_type = Letter;

  explicit LetterCrystal(CartanType type) : type_(type) {}

  int rank() const noexcept { return type_.rank(); }
  Weight weight(Letter x) const;
  std::optional<Letter> e(Letter x, int i) const;
  std::optional<Letter> f(Letter x, int i) const;
  std::int64_t epsilon(Letter x, int i) const { return e(x, i) ? 1 : 0; }
  std::int64_t phi(Letter x, int i) const { return f(x, i) ? 1 : 0; }
  std::string to_text(Letter x) const { return x.to_text(); }

  std::vector<Letter> alphabet() const;

 private:
  CartanType type_;
};

// Strictly increasing word [i_1, ..., i_N], read as i_1 (x) ... (x) i_N.
class Column {
 public:
  Column() = default;
  // Throws ContractViolation unless the letters strictly increase.
  explicit Column(std::vector<Letter> letters);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }

  // "[1,2,2̄]".
  std::string to_text() const;
  // [1, 2, -2].
  std::vector<int> signed_codes() const;

  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;

 private:
  std::vector<Letter> letters_;
};

void to_json(nlohmann::json& j, const Column& c);

// If i_k = p and i_l = p̄ both occur then k + (N - l + 1) <= p.
bool column_admissible(const Column& column);

class ColumnCrystal {
 public:
  using element_type = Column;

  explicit ColumnCrystal(CartanType type) : letters_(type), type_(type) {}

  int rank() const noexcept { return type_.rank(); }
  Weight weight(const Column& c) const;
  std::int64_t epsilon(const Column& c, int i) const;
  std::int64_t phi(const Column& c, int i) const;
  std::optional<Column> e(const Column& c, int i) const;
  std::optional<Column> f(const Column& c, int i) const;
  std::string to_text(const Column& c) const { return c.to_text(); }

 private:
  struct PrefixStats {
    std::int64_t epsilon;
    std::int64_t phi;
  };
  // stats[k] = (epsilon, phi) of the word i_1 (x) ... (x) i_k; stats[0] is empty.
  std::vector<PrefixStats> prefix_stats(const Column& c, int i) const;
  // Index of the letter the operator acts on, if any.
  std::optional<std::size_t> acting_position(const Column& c, int i, bool raising) const;
  std::optional<Column> act(const Column& c, int i, bool raising) const;

  LetterCrystal letters_;
  CartanType type_;
};

// All admissible strictly increasing N-letter columns, 1 <= N <= n, sorted.
std::vector<Column> build_b_lambda(const CartanType& type, int length);

struct HighestWeightPair {
  Column left;
  Column right;
  Weight lambda;
};

// Highest-weight elements u (x) v of B(Lambda_p) (x) B(Lambda_q), ordered by v.
std::vector<HighestWeightPair> tensor_highest_weights(const CartanType& type, int p, int q);

}  // namespace monocrystal

#endif  // MONOCRYSTAL_TABLEAUX_HPP_
