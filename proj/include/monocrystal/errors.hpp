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

#ifndef MONOCRYSTAL_ERRORS_HPP_
#define MONOCRYSTAL_ERRORS_HPP_

#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace monocrystal {

// Argument outside the domain of an operation (bad index, rank, length).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured resource limit (vertex budget) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (e.g. non-closed input set).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A result the library guarantees failed to hold.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  [[maybe_unused]] const bool overflow = __builtin_add_overflow(a, b, &out);
  assert(!overflow && "64-bit overflow");
  return out;
}

}  // namespace detail
}  // namespace monocrystal

#endif  // MONOCRYSTAL_ERRORS_HPP_
