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

#ifndef MONOCRYSTAL_ALPHABET_HPP_
#define MONOCRYSTAL_ALPHABET_HPP_

#include <compare>
#include <string>

namespace monocrystal {

// A letter of the ordered alphabet 1 < 2 < ... < n < n̄ < ... < 2̄ < 1̄.
//
// Encoded as a signed integer: +i for i, -i for ī. The encoding is internal;
// ordering goes through operator<=>, which implements the alphabet order.
class Letter {
 public:
  constexpr Letter() = default;
  static constexpr Letter unbarred(int i) { return Letter(i); }
  static constexpr Letter barred(int i) { return Letter(-i); }
  static constexpr Letter from_signed(int code) { return Letter(code); }

  constexpr int index() const noexcept { return code_ < 0 ? -code_ : code_; }
  constexpr bool is_barred() const noexcept { return code_ < 0; }
  constexpr int signed_code() const noexcept { return code_; }

  // 1-based position in the alphabet of rank n: i -> i, ī -> 2n+1-i.
  constexpr int position(int rank) const noexcept {
    return is_barred() ? 2 * rank + 1 - index() : index();
  }
  static constexpr Letter at_position(int rank, int pos) {
    return pos <= rank ? unbarred(pos) : barred(2 * rank + 1 - pos);
  }

  // "3" or "3̄" (combining macron).
  std::string to_text() const {
    std::string s = std::to_string(index());
    if (is_barred()) s += "̄";
    return s;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    // Unbarred letters precede barred ones; barred letters run in descending index.
    if (a.is_barred() != b.is_barred()) {
      return a.is_barred() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a.is_barred() ? b.index() <=> a.index() : a.index() <=> b.index();
  }

 private:
  constexpr explicit Letter(int code) : code_(code) {}
  int code_ = 1;
};

}  // namespace monocrystal

#endif  // MONOCRYSTAL_ALPHABET_HPP_
