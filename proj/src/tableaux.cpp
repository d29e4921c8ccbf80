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

#include "monocrystal/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "monocrystal/errors.hpp"

namespace monocrystal {

Weight LetterCrystal::weight(Letter x) const {
  std::vector<std::int64_t> eps(rank(), 0);
  eps[x.index() - 1] = x.is_barred() ? -1 : 1;
  return Weight::from_epsilon(eps);
}

std::optional<Letter> LetterCrystal::f(Letter x, int i) const {
  type_.check_index(i);
  const int n = rank();
  if (i < n) {
    if (x == Letter::unbarred(i)) return Letter::unbarred(i + 1);
    if (x == Letter::barred(i + 1)) return Letter::barred(i);
    return std::nullopt;
  }
  if (x == Letter::unbarred(n)) return Letter::barred(n);
  return std::nullopt;
}

std::optional<Letter> LetterCrystal::e(Letter x, int i) const {
  type_.check_index(i);
  const int n = rank();
  if (i < n) {
    if (x == Letter::unbarred(i + 1)) return Letter::unbarred(i);
    if (x == Letter::barred(i)) return Letter::barred(i + 1);
    return std::nullopt;
  }
  if (x == Letter::barred(n)) return Letter::unbarred(n);
  return std::nullopt;
}

std::vector<Letter> LetterCrystal::alphabet() const {
  std::vector<Letter> out;
  for (int pos = 1; pos <= 2 * rank(); ++pos) out.push_back(Letter::at_position(rank(), pos));
  return out;
}

Column::Column(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t k = 1; k < letters_.size(); ++k) {
    if (!(letters_[k - 1] < letters_[k])) {
      throw ContractViolation("column letters must strictly increase: " + to_text());
    }
  }
}

std::string Column::to_text() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k > 0) out << ',';
    out << letters_[k].to_text();
  }
  out << ']';
  return out.str();
}

std::vector<int> Column::signed_codes() const {
  std::vector<int> out;
  for (Letter x : letters_) out.push_back(x.signed_code());
  return out;
}

void to_json(nlohmann::json& j, const Column& c) { j = c.signed_codes(); }

bool column_admissible(const Column& column) {
  const auto letters = column.letters();
  const int length = static_cast<int>(letters.size());
  for (int k = 0; k < length; ++k) {
    if (letters[k].is_barred()) continue;
    const int p = letters[k].index();
    for (int l = k + 1; l < length; ++l) {
      if (letters[l] == Letter::barred(p)) {
        // 1-based positions: (k+1) + (N - (l+1) + 1).
        if ((k + 1) + (length - l) > p) return false;
      }
    }
  }
  return true;
}

Weight ColumnCrystal::weight(const Column& c) const {
  Weight w = Weight::zero(rank());
  for (Letter x : c.letters()) w += letters_.weight(x);
  return w;
}

std::vector<ColumnCrystal::PrefixStats> ColumnCrystal::prefix_stats(const Column& c, int i) const {
  std::vector<PrefixStats> stats{{0, 0}};
  stats.reserve(c.size() + 1);
  std::int64_t prefix_pairing = 0;
  for (Letter x : c.letters()) {
    const std::int64_t eps = letters_.epsilon(x, i);
    const std::int64_t phi = letters_.phi(x, i);
    const PrefixStats& prev = stats.back();
    stats.push_back({std::max(prev.epsilon, eps - prefix_pairing),
                     std::max(phi, prev.phi + (phi - eps))});
    prefix_pairing += phi - eps;
  }
  return stats;
}

std::int64_t ColumnCrystal::epsilon(const Column& c, int i) const {
  type_.check_index(i);
  return prefix_stats(c, i).back().epsilon;
}

std::int64_t ColumnCrystal::phi(const Column& c, int i) const {
  type_.check_index(i);
  return prefix_stats(c, i).back().phi;
}

std::optional<std::size_t> ColumnCrystal::acting_position(const Column& c, int i,
                                                          bool raising) const {
  const auto stats = prefix_stats(c, i);
  // Peel w = w' (x) x from the right: the operator moves into w' when the
  // tensor rule sends it left, otherwise it acts on x.
  for (std::size_t k = c.size(); k-- > 0;) {
    const Letter x = c[k];
    const std::int64_t left_phi = stats[k].phi;
    const std::int64_t right_eps = letters_.epsilon(x, i);
    const bool goes_left = raising ? left_phi >= right_eps : left_phi > right_eps;
    if (k == 0 || !goes_left) {
      if (k == 0 && goes_left) return std::nullopt;
      const bool defined = raising ? letters_.e(x, i).has_value() : letters_.f(x, i).has_value();
      if (!defined) return std::nullopt;
      return k;
    }
  }
  return std::nullopt;
}

std::optional<Column> ColumnCrystal::act(const Column& c, int i, bool raising) const {
  type_.check_index(i);
  const auto k = acting_position(c, i, raising);
  if (!k) return std::nullopt;
  std::vector<Letter> word(c.letters().begin(), c.letters().end());
  word[*k] = raising ? *letters_.e(word[*k], i) : *letters_.f(word[*k], i);
  for (std::size_t t = 1; t < word.size(); ++t) {
    if (!(word[t - 1] < word[t])) {
      throw InternalInvariantError("operator left the set of columns at " + c.to_text());
    }
  }
  return Column(std::move(word));
}

std::optional<Column> ColumnCrystal::e(const Column& c, int i) const { return act(c, i, true); }
std::optional<Column> ColumnCrystal::f(const Column& c, int i) const { return act(c, i, false); }

std::vector<Column> build_b_lambda(const CartanType& type, int length) {
  const int n = type.rank();
  if (length < 1 || length > n) {
    throw DomainError("column length " + std::to_string(length) + " outside [1," +
                      std::to_string(n) + "]");
  }
  std::vector<Column> out;
  std::vector<int> pos(length);
  for (int j = 0; j < length; ++j) pos[j] = j + 1;
  while (true) {
    std::vector<Letter> word(length);
    for (int j = 0; j < length; ++j) word[j] = Letter::at_position(n, pos[j]);
    Column column(std::move(word));
    if (column_admissible(column)) out.push_back(std::move(column));
    int j = length - 1;
    while (j >= 0 && pos[j] == 2 * n - (length - 1 - j)) --j;
    if (j < 0) break;
    ++pos[j];
    for (int t = j + 1; t < length; ++t) pos[t] = pos[t - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HighestWeightPair> tensor_highest_weights(const CartanType& type, int p, int q) {
  type.check_index(p, "p");
  type.check_index(q, "q");
  const ColumnCrystal columns(type);
  const TensorCrystal<ColumnCrystal, ColumnCrystal> tensor{columns, columns};
  const auto left = build_b_lambda(type, p);
  const auto right = build_b_lambda(type, q);
  std::vector<HighestWeightPair> out;
  for (const Column& u : left) {
    for (const Column& v : right) {
      const TensorPair<Column, Column> pair{u, v};
      if (is_highest_weight(tensor, pair)) out.push_back({u, v, tensor.weight(pair)});
    }
  }
  std::sort(out.begin(), out.end(), [](const HighestWeightPair& a, const HighestWeightPair& b) {
    return std::tie(a.left, a.right) < std::tie(b.left, b.right);
  });
  return out;
}

}  // namespace monocrystal
