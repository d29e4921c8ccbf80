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

#include "monocrystal/root_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "monocrystal/errors.hpp"

namespace monocrystal {

Weight Weight::from_epsilon(std::span<const std::int64_t> eps) {
  std::vector<std::int64_t> lambda(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    const std::int64_t next = i + 1 < eps.size() ? eps[i + 1] : 0;
    lambda[i] = eps[i] - next;
  }
  return Weight(std::move(lambda));
}

std::int64_t Weight::pairing(int i) const {
  if (i < 1 || i > rank()) {
    throw DomainError("pairing index " + std::to_string(i) + " outside [1," +
                      std::to_string(rank()) + "]");
  }
  return coeffs_[i - 1];
}

bool Weight::dominant() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

std::vector<std::int64_t> Weight::to_epsilon() const {
  std::vector<std::int64_t> eps(coeffs_.size(), 0);
  std::int64_t tail = 0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    tail = detail::checked_add(tail, coeffs_[j]);
    eps[j] = tail;
  }
  return eps;
}

std::string Weight::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (std::llabs(c) != 1) out << std::llabs(c);
    out << "Λ" << (i + 1);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

void Weight::require_same_rank(const Weight& other) const {
  if (other.rank() != rank()) {
    throw DomainError("weight rank mismatch: " + std::to_string(rank()) + " vs " +
                      std::to_string(other.rank()));
  }
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_rank(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] = detail::checked_add(coeffs_[i], other.coeffs_[i]);
  }
  return *this;
}

Weight& Weight::operator-=(const Weight& other) { return *this += -other; }

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void to_json(nlohmann::json& j, const Weight& w) {
  j = nlohmann::json{{"lambda", std::vector<std::int64_t>(w.coeffs().begin(), w.coeffs().end())}};
}

void from_json(const nlohmann::json& j, Weight& w) {
  w = Weight(j.at("lambda").get<std::vector<std::int64_t>>());
}

CartanType::CartanType(int rank) : rank_(rank) {
  if (rank < 2) throw DomainError("type C rank must be >= 2, got " + std::to_string(rank));
}

void CartanType::check_index(int i, const char* what) const {
  if (!valid_index(i)) {
    throw DomainError(std::string(what) + " " + std::to_string(i) + " outside [1," +
                      std::to_string(rank_) + "]");
  }
}

int CartanType::entry(int i, int j) const {
  check_index(i);
  check_index(j);
  if (i == j) return 2;
  if (i == rank_ - 1 && j == rank_) return -2;
  if (std::abs(i - j) == 1) return -1;
  return 0;
}

Weight CartanType::fundamental(int i) const {
  Weight w = Weight::zero(rank_);
  if (i == 0) return w;
  check_index(i);
  std::vector<std::int64_t> c(rank_, 0);
  c[i - 1] = 1;
  return Weight(std::move(c));
}

Weight CartanType::simple_root(int i) const {
  check_index(i);
  std::vector<std::int64_t> c(rank_);
  for (int j = 1; j <= rank_; ++j) c[j - 1] = entry(j, i);
  return Weight(std::move(c));
}

Weight CartanType::fundamental_sum(int a, int c) const { return fundamental(a) + fundamental(c); }

}  // namespace monocrystal
