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

#include "monocrystal/product.hpp"

#include <algorithm>
#include <chrono>

#include "monocrystal/errors.hpp"

namespace monocrystal {

void ProductSpec::validate() const {
  const CartanType t(rank);
  t.check_index(p, "p");
  t.check_index(q, "q");
  if (m < 1) throw DomainError("m must be >= 1, got " + std::to_string(m));
}

std::optional<AcPair> ac_of(const Weight& lambda) {
  std::vector<int> parts;
  for (int i = 1; i <= lambda.rank(); ++i) {
    const std::int64_t c = lambda.pairing(i);
    if (c < 0 || c > 2) return std::nullopt;
    for (std::int64_t k = 0; k < c; ++k) parts.push_back(i);
  }
  if (parts.size() > 2) return std::nullopt;
  while (parts.size() < 2) parts.insert(parts.begin(), 0);
  return AcPair{parts[0], parts[1]};
}

std::string ac_text(AcPair ac) {
  if (ac.c == 0) return "0";
  if (ac.a == 0) return "Λ" + std::to_string(ac.c);
  if (ac.a == ac.c) return "2Λ" + std::to_string(ac.a);
  return "Λ" + std::to_string(ac.a) + "+Λ" + std::to_string(ac.c);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kAlways:
      return "always";
    case Family::kEvenGap:
      return "even_gap";
    case Family::kZeroGap:
      return "zero_gap";
  }
  return "?";
}

std::vector<AcPair> tensor_decomposition_closed_form(const CartanType& type, int p, int q) {
  type.check_index(p, "p");
  type.check_index(q, "q");
  const int n = type.rank();
  std::vector<AcPair> out;
  for (int a = 0; a <= n; ++a) {
    for (int c = a; c <= n; ++c) {
      const int gap = (p + q) - (a + c);
      if (a + q <= p + c && a + p <= q + c && gap >= 0 && gap % 2 == 0 && a <= p &&
          p + q + c - a <= 2 * n) {
        out.push_back({a, c});
      }
    }
  }
  return out;
}

namespace {

// 0 <= a <= p, a <= c <= n, a+p <= c+q, a+q <= c+p, (p+q+c-a)/2 <= n,
// excluding the labels of B(Lambda_p + Lambda_q).
bool in_product_region(int n, int p, int q, int a, int c) {
  if ((a == p && c == q) || (a == q && c == p)) return false;
  return 0 <= a && a <= p && a <= c && c <= n && a + p <= c + q && a + q <= c + p &&
         p + q + c - a <= 2 * n;
}

}  // namespace

std::vector<ComponentPrediction> product_predictions(const CartanType& type, int p, int q) {
  type.check_index(p, "p");
  type.check_index(q, "q");
  const int n = type.rank();
  std::vector<ComponentPrediction> out;
  out.push_back({{std::min(p, q), std::max(p, q)}, Family::kAlways, std::nullopt});
  for (int a = 0; a <= n; ++a) {
    for (int c = a; c <= n; ++c) {
      if (!in_product_region(n, p, q, a, c)) continue;
      const int gap = (p + q) - (a + c);
      if (gap > 0 && gap % 2 == 0) {
        const int numerator = q - p - a - c + 2;
        if (numerator % 2 != 0) {
          throw InternalInvariantError("even-gap threshold is not an integer");
        }
        out.push_back({{a, c}, Family::kEvenGap, numerator / 2 + n});
      } else if (gap == 0) {
        out.push_back({{a, c}, Family::kZeroGap, q - a + 1});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ComponentPrediction& x, const ComponentPrediction& y) { return x.ac < y.ac; });
  return out;
}

std::vector<AcPair> product_decomposition_closed_form(const ProductSpec& spec) {
  spec.validate();
  std::vector<AcPair> out;
  for (const auto& prediction : product_predictions(spec.type(), spec.p, spec.q)) {
    if (prediction.appears_at(spec.m)) out.push_back(prediction.ac);
  }
  return out;
}

std::vector<AcPair> zero_gap_family_strict_region(const CartanType& type, int p, int q) {
  type.check_index(p, "p");
  type.check_index(q, "q");
  const int n = type.rank();
  std::vector<AcPair> out;
  for (int a = 0; a < p; ++a) {
    for (int c = p + 1; c <= n; ++c) {
      if ((a == p && c == q) || (a == q && c == p)) continue;
      if (a + p <= c + q && p + q == a + c && a + q <= c + p && p + q + c - a <= 2 * n) {
        out.push_back({a, c});
      }
    }
  }
  return out;
}

std::vector<Monomial> fundamental_crystal(const CartanType& type, int k, std::int64_t m,
                                          std::size_t vertex_budget) {
  type.check_index(k, "k");
  const MonomialCrystal crystal(type);
  auto graph = generate_closure(crystal, {Monomial::y(k, m)}, vertex_budget);
  std::vector<Monomial> out = graph.vertices();
  std::sort(out.begin(), out.end());
  if (out != crystal.m_k_set(k, m)) {
    throw InternalInvariantError("closure of Y_" + std::to_string(k) + "(" + std::to_string(m) +
                                 ") differs from M_k(m)");
  }
  return out;
}

std::set<Monomial> product_of(const std::vector<std::vector<Monomial>>& factors) {
  std::set<Monomial> acc{Monomial()};
  for (const auto& factor : factors) {
    std::set<Monomial> next;
    for (const Monomial& x : acc) {
      for (const Monomial& y : factor) next.insert(x * y);
    }
    acc = std::move(next);
  }
  return acc;
}

ProductSet product_set(const ProductSpec& spec, std::size_t vertex_budget) {
  spec.validate();
  const CartanType type = spec.type();
  ProductSet out;
  out.left_factors = fundamental_crystal(type, spec.p, spec.m, vertex_budget);
  out.right_factors = fundamental_crystal(type, spec.q, 1, vertex_budget);
  for (std::size_t l = 0; l < out.left_factors.size(); ++l) {
    for (std::size_t r = 0; r < out.right_factors.size(); ++r) {
      Monomial product = out.left_factors[l] * out.right_factors[r];
      out.factorizations[product].push_back({l, r});
      out.elements.insert(std::move(product));
    }
  }
  if (!is_closed(MonomialCrystal(type), out.elements)) {
    throw InternalInvariantError("product set is not closed under e_i and f_i");
  }
  return out;
}

Decomposition<Monomial> decompose_product_bruteforce(const ProductSpec& spec,
                                                     std::size_t vertex_budget) {
  const ProductSet set = product_set(spec, vertex_budget);
  auto out = decompose_set(MonomialCrystal(spec.type()), set.elements, vertex_budget);
  const Monomial top = Monomial::y(spec.p, spec.m);
  for (const auto& component : out.components) {
    for (const Factorization& f : set.factorizations.at(component.witness)) {
      if (set.left_factors[f.left] != top) {
        throw InternalInvariantError("highest-weight product " + component.witness.to_text() +
                                     " factors with left factor " +
                                     set.left_factors[f.left].to_text());
      }
    }
  }
  return out;
}

Decomposition<Monomial> decompose_product_shifted(int rank, int p, std::int64_t left_shift, int q,
                                                  std::int64_t right_shift,
                                                  std::size_t vertex_budget) {
  if (left_shift < right_shift) {
    throw DomainError("left shift must be >= right shift");
  }
  const ProductSpec spec{rank, p, q, left_shift - right_shift + 1};
  auto out = decompose_product_bruteforce(spec, vertex_budget);
  for (auto& component : out.components) component.witness = component.witness.shifted(right_shift - 1);
  return out;
}

std::vector<AcPair> ac_multiset(const Decomposition<Monomial>& d) {
  std::vector<AcPair> out;
  for (const auto& component : d.components) {
    auto ac = ac_of(component.lambda);
    if (!ac) {
      throw InternalInvariantError("highest weight " + component.lambda.to_text() +
                                   " is not Lambda_a + Lambda_c");
    }
    out.push_back(*ac);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t VerifyReport::mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const CellResult& c) { return !c.match(); }));
}

VerifyReport verify_range(int n_max, std::int64_t m_max, std::size_t vertex_budget) {
  if (n_max < 2) throw DomainError("n_max must be >= 2");
  if (m_max < 1) throw DomainError("m_max must be >= 1");
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  VerifyReport report{n_max, m_max, {}, 0.0};
  for (int n = 2; n <= n_max; ++n) {
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        for (std::int64_t m = 1; m <= m_max; ++m) {
          const auto cell_start = Clock::now();
          CellResult cell;
          cell.spec = {n, p, q, m};
          const auto d = decompose_product_bruteforce(cell.spec, vertex_budget);
          cell.brute_force = ac_multiset(d);
          cell.closed_form = product_decomposition_closed_form(cell.spec);
          cell.elements = d.total_size();
          cell.millis =
              std::chrono::duration<double, std::milli>(Clock::now() - cell_start).count();
          report.cells.push_back(std::move(cell));
        }
      }
    }
  }
  report.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

}  // namespace monocrystal
