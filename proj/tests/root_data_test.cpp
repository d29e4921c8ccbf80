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

#include <gtest/gtest.h>

#include <random>

#include "monocrystal/errors.hpp"

namespace monocrystal {
namespace {

using Coeffs = std::vector<std::int64_t>;

TEST(CartanTypeTest, Entries) {
  const CartanType c4(4);
  EXPECT_EQ(c4.entry(3, 4), -2);
  EXPECT_EQ(c4.entry(4, 3), -1);
  EXPECT_EQ(c4.entry(2, 2), 2);
  EXPECT_EQ(c4.entry(1, 3), 0);
  EXPECT_EQ(c4.entry(1, 2), -1);
}

TEST(CartanTypeTest, RejectsBadInput) {
  EXPECT_THROW(CartanType(1), DomainError);
  EXPECT_THROW(CartanType(0), DomainError);
  const CartanType c3(3);
  EXPECT_THROW(c3.entry(0, 1), DomainError);
  EXPECT_THROW(c3.entry(1, 4), DomainError);
  EXPECT_THROW(c3.simple_root(4), DomainError);
}

TEST(CartanTypeTest, SimpleRoots) {
  const CartanType c2(2);
  EXPECT_EQ(c2.simple_root(2).coeffs()[0], -2);
  EXPECT_EQ(c2.simple_root(2), Weight(Coeffs{-2, 2}));
  EXPECT_EQ(c2.simple_root(2).to_epsilon(), (Coeffs{0, 2}));

  const CartanType c3(3);
  EXPECT_EQ(c3.simple_root(1), Weight(Coeffs{2, -1, 0}));
  EXPECT_EQ(c3.simple_root(2).to_epsilon(), (Coeffs{0, 1, -1}));
}

TEST(CartanTypeTest, SimpleRootsMatchEpsilonForm) {
  for (int n = 2; n <= 6; ++n) {
    const CartanType t(n);
    for (int i = 1; i <= n; ++i) {
      Coeffs expected(n, 0);
      if (i < n) {
        expected[i - 1] = 1;
        expected[i] = -1;
      } else {
        expected[n - 1] = 2;
      }
      EXPECT_EQ(t.simple_root(i).to_epsilon(), expected) << "n=" << n << " i=" << i;
    }
  }
}

TEST(CartanTypeTest, PairingWithSimpleRootsIsCartanEntry) {
  for (int n = 2; n <= 6; ++n) {
    const CartanType t(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) EXPECT_EQ(t.simple_root(j).pairing(i), t.entry(i, j));
    }
  }
}

// Determinant over the rationals by fraction-free elimination (Bareiss).
std::int64_t determinant(std::vector<Coeffs> a) {
  const std::size_t n = a.size();
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

TEST(CartanTypeTest, SimpleRootsAreIndependent) {
  for (int n = 2; n <= 6; ++n) {
    const CartanType t(n);
    std::vector<Coeffs> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(t.simple_root(i).to_epsilon());
    // det of the epsilon-coordinate matrix of (alpha_1..alpha_n) is 2.
    EXPECT_EQ(determinant(rows), 2) << "n=" << n;
  }
}

TEST(WeightTest, PairingAndDominance) {
  const CartanType c3(3);
  EXPECT_EQ(c3.fundamental(2).pairing(2), 1);
  EXPECT_EQ(c3.fundamental(2).pairing(1), 0);
  EXPECT_FALSE((c3.fundamental(1) - c3.fundamental(2)).dominant());

  const CartanType c5(5);
  const Weight sum = c5.fundamental(3) + c5.fundamental(3);
  EXPECT_EQ(sum, Weight(Coeffs{0, 0, 2, 0, 0}));
  EXPECT_TRUE(sum.dominant());
  EXPECT_TRUE(c5.fundamental(0).dominant());
  EXPECT_EQ(c5.fundamental(0), Weight::zero(5));
}

TEST(WeightTest, RankMismatchIsDomainError) {
  EXPECT_THROW(Weight::zero(2) + Weight::zero(3), DomainError);
  EXPECT_THROW(Weight::zero(2).pairing(3), DomainError);
}

TEST(WeightTest, BasisConversion) {
  const CartanType c3(3);
  EXPECT_EQ(c3.fundamental(2).to_epsilon(), (Coeffs{1, 1, 0}));
  EXPECT_EQ(Weight::from_epsilon(Coeffs{1, 0, -1}), Weight(Coeffs{1, 1, -1}));
  EXPECT_EQ(Weight::zero(4).to_epsilon(), (Coeffs{0, 0, 0, 0}));
  EXPECT_EQ(Weight::from_epsilon(Coeffs{0, 0, 0}), Weight::zero(3));
}

TEST(WeightTest, BasisConversionRoundTripsRandomVectors) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
  for (int trial = 0; trial < 2000; ++trial) {
    Coeffs v(2 + trial % 6);
    for (auto& x : v) x = coeff(rng);
    EXPECT_EQ(Weight(v).to_epsilon(), Weight::from_epsilon(Weight(v).to_epsilon()).to_epsilon());
    EXPECT_EQ(Weight::from_epsilon(Weight(v).to_epsilon()), Weight(v));
    EXPECT_EQ(Weight::from_epsilon(v).to_epsilon(), v);
  }
}

TEST(WeightTest, TextAndJson) {
  EXPECT_EQ(Weight(Coeffs{0, 0, 2, 0, 0}).to_text(), "2Λ3");
  EXPECT_EQ(Weight(Coeffs{0, 1, 0, 1, 0}).to_text(), "Λ2+Λ4");
  EXPECT_EQ(Weight(Coeffs{-1, 1}).to_text(), "-Λ1+Λ2");
  EXPECT_EQ(Weight::zero(3).to_text(), "0");

  const nlohmann::json j = Weight(Coeffs{1, -2, 0});
  EXPECT_EQ(j.dump(), R"({"lambda":[1,-2,0]})");
  EXPECT_EQ(j.get<Weight>(), Weight(Coeffs{1, -2, 0}));
}

}  // namespace
}  // namespace monocrystal
