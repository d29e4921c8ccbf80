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

#include "monocrystal/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "monocrystal/errors.hpp"

namespace monocrystal {

Monomial Monomial::y(int index, std::int64_t shift, std::int64_t exponent) {
  Monomial out;
  if (exponent != 0) out.factors_.push_back({{index, shift}, exponent});
  return out;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.key < b.key; });
  Monomial out;
  for (const Factor& f : factors) {
    if (!out.factors_.empty() && out.factors_.back().key == f.key) {
      out.factors_.back().exponent = detail::checked_add(out.factors_.back().exponent, f.exponent);
    } else {
      out.factors_.push_back(f);
    }
  }
  std::erase_if(out.factors_, [](const Factor& f) { return f.exponent == 0; });
  return out;
}

namespace {

class TextReader {
 public:
  explicit TextReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("malformed monomial \"" + std::string(text_) + "\" at offset " +
                      std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Monomial Monomial::parse(std::string_view text) {
  if (text == "1") return {};
  TextReader in(text);
  std::vector<Factor> factors;
  do {
    in.expect('Y');
    const std::int64_t index = in.integer();
    if (index < 1) in.fail("Y index must be positive");
    in.expect('(');
    const std::int64_t shift = in.integer();
    in.expect(')');
    std::int64_t exponent = 1;
    if (in.consume('^')) exponent = in.integer();
    factors.push_back({{static_cast<int>(index), shift}, exponent});
  } while (in.consume('*'));
  if (!in.done()) in.fail("trailing characters");
  return from_factors(std::move(factors));
}

std::int64_t Monomial::exponent(int index, std::int64_t shift) const {
  const YKey key{index, shift};
  auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                             [](const Factor& f, const YKey& k) { return f.key < k; });
  return it != factors_.end() && it->key == key ? it->exponent : 0;
}

std::span<const Factor> Monomial::row(int index) const {
  auto lo = std::partition_point(factors_.begin(), factors_.end(),
                                 [&](const Factor& f) { return f.key.index < index; });
  auto hi = std::partition_point(lo, factors_.end(),
                                 [&](const Factor& f) { return f.key.index == index; });
  return {lo, hi};
}

int Monomial::max_index() const noexcept {
  return factors_.empty() ? 0 : factors_.back().key.index;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.exponent = -f.exponent;
  return out;
}

Monomial Monomial::shifted(std::int64_t amount) const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.key.shift = detail::checked_add(f.key.shift, amount);
  return out;
}

Monomial Monomial::without_row(int index) const {
  Monomial out = *this;
  std::erase_if(out.factors_, [&](const Factor& f) { return f.key.index == index; });
  return out;
}

std::string Monomial::to_text() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const Factor& f = factors_[k];
    if (k > 0) out << '*';
    out << 'Y' << f.key.index << '(' << f.key.shift << ')';
    if (f.exponent != 1) out << '^' << f.exponent;
  }
  return out.str();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->key < j->key)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->key < i->key) {
      out.factors_.push_back(*j++);
    } else {
      const std::int64_t e = detail::checked_add(i->exponent, j->exponent);
      if (e != 0) out.factors_.push_back({i->key, e});
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const Factor& f : factors_) {
    mix(static_cast<std::uint64_t>(f.key.index));
    mix(static_cast<std::uint64_t>(f.key.shift));
    mix(static_cast<std::uint64_t>(f.exponent));
  }
  return h;
}

void to_json(nlohmann::json& j, const Monomial& m) {
  j = nlohmann::json::array();
  for (const Factor& f : m.factors()) j.push_back({f.key.index, f.key.shift, f.exponent});
}

void from_json(const nlohmann::json& j, Monomial& m) {
  std::vector<Factor> factors;
  for (const auto& triple : j) {
    if (!triple.is_array() || triple.size() != 3) {
      throw DomainError("monomial JSON entry must be [i, shift, exp]");
    }
    factors.push_back({{triple[0].get<int>(), triple[1].get<std::int64_t>()},
                       triple[2].get<std::int64_t>()});
  }
  m = Monomial::from_factors(std::move(factors));
}

ElementMeasures element_measures(const TaggedElement& e, int rank) {
  return {e.length, e.height(rank)};
}

void MonomialCrystal::check_support(const Monomial& m) const {
  if (!m.empty() && (m.factors().front().key.index < 1 || m.max_index() > rank())) {
    throw DomainError("monomial " + m.to_text() + " has a Y index outside [1," +
                      std::to_string(rank()) + "]");
  }
}

Weight MonomialCrystal::weight(const Monomial& m) const {
  check_support(m);
  std::vector<std::int64_t> lambda(rank(), 0);
  for (const Factor& f : m.factors()) {
    lambda[f.key.index - 1] = detail::checked_add(lambda[f.key.index - 1], f.exponent);
  }
  return Weight(std::move(lambda));
}

StringStats MonomialCrystal::string_stats(const Monomial& m, int i) const {
  type_.check_index(i);
  const auto row = m.row(i);
  StringStats s;
  if (row.empty()) return s;

  // Partial sums are constant outside [min shift - 1, max shift + 1].
  const std::int64_t lo = row.front().key.shift - 1;
  std::int64_t best = 0;
  std::int64_t partial = 0;
  s.n_f = s.n_e = lo;
  auto it = row.begin();
  for (std::int64_t shift = lo; shift <= row.back().key.shift + 1; ++shift) {
    if (it != row.end() && it->key.shift == shift) partial += (it++)->exponent;
    if (partial > best) {
      best = partial;
      s.n_f = s.n_e = shift;
    } else if (partial == best) {
      s.n_e = shift;
    }
  }
  s.phi = best;
  s.epsilon = best - partial;
  return s;
}

bool MonomialCrystal::is_highest_weight(const Monomial& m) const {
  for (int i = 1; i <= rank(); ++i) {
    if (epsilon(m, i) != 0) return false;
  }
  return true;
}

std::optional<Monomial> MonomialCrystal::e(const Monomial& m, int i) const {
  const StringStats s = string_stats(m, i);
  if (s.epsilon == 0) return std::nullopt;
  return a_monomial(i, s.n_e) * m;
}

std::optional<Monomial> MonomialCrystal::f(const Monomial& m, int i) const {
  const StringStats s = string_stats(m, i);
  if (s.phi == 0) return std::nullopt;
  return a_monomial(i, s.n_f).inverse() * m;
}

Monomial MonomialCrystal::a_monomial(int i, std::int64_t m) const {
  type_.check_index(i);
  const int n = rank();
  std::vector<Factor> factors{{{i, m}, 1}, {{i, m + 1}, 1}};
  if (i == n) {
    factors.push_back({{n - 1, m + 1}, -2});
  } else {
    if (i > 1) factors.push_back({{i - 1, m + 1}, -1});
    factors.push_back({{i + 1, m}, -1});
  }
  return Monomial::from_factors(std::move(factors));
}

Monomial MonomialCrystal::x_monomial(const XLetter& x) const {
  const int i = x.letter.index();
  type_.check_index(i, "X-letter index");
  const std::int64_t m = x.shift;
  std::vector<Factor> factors;
  if (!x.letter.is_barred()) {
    factors.push_back({{i, m}, 1});
    if (i > 1) factors.push_back({{i - 1, m + 1}, -1});
  } else {
    const std::int64_t s = m + rank() - i + 1;
    if (i > 1) factors.push_back({{i - 1, s}, 1});
    factors.push_back({{i, s}, -1});
  }
  return Monomial::from_factors(std::move(factors));
}

std::vector<std::pair<std::vector<Letter>, Monomial>> MonomialCrystal::m_k_words(
    int k, std::int64_t m) const {
  const int n = rank();
  if (k < 1 || k > 2 * n) {
    throw DomainError("M_k(m) needs 1 <= k <= 2n, got k=" + std::to_string(k));
  }
  std::vector<std::pair<std::vector<Letter>, Monomial>> out;
  // Positions p_1 < ... < p_k in [1, 2n], advanced like an odometer.
  std::vector<int> pos(k);
  for (int j = 0; j < k; ++j) pos[j] = j + 1;
  while (true) {
    std::vector<Letter> word(k);
    Monomial y;
    for (int j = 0; j < k; ++j) {
      word[j] = Letter::at_position(n, pos[j]);
      y *= x_monomial({word[j], k + m - 1 - j});
    }
    out.emplace_back(std::move(word), std::move(y));
    int j = k - 1;
    while (j >= 0 && pos[j] == 2 * n - (k - 1 - j)) --j;
    if (j < 0) break;
    ++pos[j];
    for (int t = j + 1; t < k; ++t) pos[t] = pos[t - 1] + 1;
  }
  return out;
}

std::vector<Monomial> MonomialCrystal::m_k_set(int k, std::int64_t m) const {
  std::vector<Monomial> out;
  for (auto& [word, y] : m_k_words(k, m)) out.push_back(std::move(y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TaggedElement> MonomialCrystal::tagged_m_k_set(int k, std::int64_t m) const {
  std::vector<TaggedElement> out;
  for (auto& y : m_k_set(k, m)) out.push_back({std::move(y), k, m});
  return out;
}

}  // namespace monocrystal
