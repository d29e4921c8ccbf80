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

// Laurent monomials in the variables Y_i(m) and the Nakajima crystal structure
// on them for type C_n, with the fixed choice c_ij = 0 (i > j), 1 (i < j).

#ifndef MONOCRYSTAL_MONOMIAL_HPP_
#define MONOCRYSTAL_MONOMIAL_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "monocrystal/alphabet.hpp"
#include "monocrystal/root_data.hpp"

namespace monocrystal {

struct YKey {
  int index = 1;
  std::int64_t shift = 0;

  friend bool operator==(const YKey&, const YKey&) = default;
  friend auto operator<=>(const YKey&, const YKey&) = default;
};

struct Factor {
  YKey key;
  std::int64_t exponent = 0;

  friend bool operator==(const Factor&, const Factor&) = default;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

// Finitely supported exponent function (i, m) -> y_i(m).
//
// Canonical form: factors sorted by key (index, then shift), no zero
// exponent stored. Equality and ordering are those of the factor list.
class Monomial {
 public:
  Monomial() = default;

  static Monomial y(int index, std::int64_t shift, std::int64_t exponent = 1);
  // Sums repeated keys and drops zeros.
  static Monomial from_factors(std::vector<Factor> factors);
  // Inverse of to_text(); throws DomainError on malformed input.
  static Monomial parse(std::string_view text);

  std::span<const Factor> factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::int64_t exponent(int index, std::int64_t shift) const;
  // Factors of row i, in ascending shift order.
  std::span<const Factor> row(int index) const;
  int max_index() const noexcept;

  Monomial inverse() const;
  Monomial shifted(std::int64_t amount) const;
  // Drops every Y_i(m) factor for the given i.
  Monomial without_row(int index) const;

  // "Y1(2)^-1*Y2(1)", "1" for the empty monomial.
  std::string to_text() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial& operator*=(const Monomial& other) { return *this = *this * other; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::size_t hash() const noexcept;

 private:
  std::vector<Factor> factors_;
};

// JSON form: [[i, shift, exp], ...] in key order.
void to_json(nlohmann::json& j, const Monomial& m);
void from_json(const nlohmann::json& j, Monomial& m);

inline Monomial multiply(const Monomial& a, const Monomial& b) { return a * b; }
// i-reduction: a group morphism deleting all exponents in row i.
inline Monomial i_reduction(const Monomial& m, int index) { return m.without_row(index); }

// X-variable X_i(m) or X_ī(m).
struct XLetter {
  Letter letter;
  std::int64_t shift = 0;
};

struct StringStats {
  std::int64_t epsilon = 0;
  std::int64_t phi = 0;
  // Largest / smallest maximizer of the partial sums sum_{k<=m} y_i(k).
  // Meaningful only when epsilon > 0 (n_e) or phi > 0 (n_f).
  std::int64_t n_e = 0;
  std::int64_t n_f = 0;
};

// Element of M_p(m) carrying its ambient tag (p, m). Distinct tags can hold
// the same monomial, so length and height are properties of the tag.
struct TaggedElement {
  Monomial monomial;
  int length = 1;
  std::int64_t base = 0;

  // m + max(p - n, 0).
  std::int64_t height(int rank) const { return base + std::max(length - rank, 0); }
};

struct ElementMeasures {
  int length;
  std::int64_t height;
};
ElementMeasures element_measures(const TaggedElement& e, int rank);

class MonomialCrystal {
 public:
  using element_type = Monomial;

  explicit MonomialCrystal(CartanType type) : type_(type) {}
  explicit MonomialCrystal(int rank) : type_(rank) {}

  const CartanType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank(); }

  // Coordinate i is sum_m y_i(m). Throws DomainError on indices above n.
  Weight weight(const Monomial& m) const;
  StringStats string_stats(const Monomial& m, int i) const;
  std::int64_t epsilon(const Monomial& m, int i) const { return string_stats(m, i).epsilon; }
  std::int64_t phi(const Monomial& m, int i) const { return string_stats(m, i).phi; }
  bool is_highest_weight(const Monomial& m) const;

  std::optional<Monomial> e(const Monomial& m, int i) const;
  std::optional<Monomial> f(const Monomial& m, int i) const;

  // A_i(m) = Y_i(m) Y_i(m+1) Y_{i-1}(m+1)^-1 Y_{i+1}(m)^-1 (i < n),
  // A_n(m) = Y_n(m) Y_n(m+1) Y_{n-1}(m+1)^-2, with Y_0 = 1.
  Monomial a_monomial(int i, std::int64_t m) const;

  // X_i(m) = Y_i(m) / Y_{i-1}(m+1);  X_ī(m) = Y_{i-1}(m+n-i+1) / Y_i(m+n-i+1).
  Monomial x_monomial(const XLetter& x) const;

  // M_k(m) for 1 <= k <= 2n: the distinct Y-forms of
  // X_{i_1}(k+m-1) ... X_{i_k}(m) over strictly increasing letters, sorted.
  std::vector<Monomial> m_k_set(int k, std::int64_t m) const;
  std::vector<TaggedElement> tagged_m_k_set(int k, std::int64_t m) const;
  // Every X-word of M_k(m) together with its Y-form, in lexicographic word order.
  std::vector<std::pair<std::vector<Letter>, Monomial>> m_k_words(int k, std::int64_t m) const;

  std::string to_text(const Monomial& m) const { return m.to_text(); }

 private:
  void check_support(const Monomial& m) const;

  CartanType type_;
};

}  // namespace monocrystal

template <>
struct std::hash<monocrystal::Monomial> {
  std::size_t operator()(const monocrystal::Monomial& m) const noexcept { return m.hash(); }
};

#endif  // MONOCRYSTAL_MONOMIAL_HPP_
