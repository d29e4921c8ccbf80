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

#include <gtest/gtest.h>

#include <set>

#include "monocrystal/errors.hpp"
#include "oracle.hpp"

namespace monocrystal {
namespace {

Monomial P(const char* text) { return Monomial::parse(text); }

TEST(MonomialTest, ParseAndText) {
  const Monomial m = P("Y2(1)*Y1(2)^-1");
  EXPECT_EQ(m.to_text(), "Y1(2)^-1*Y2(1)");
  EXPECT_EQ(P("1"), Monomial());
  EXPECT_EQ(Monomial().to_text(), "1");
  EXPECT_EQ(P("Y3(3)^2").exponent(3, 3), 2);
  EXPECT_EQ(P("Y1(-4)^-3*Y1(-4)^3"), Monomial());
  EXPECT_THROW(P("Y(1)"), DomainError);
  EXPECT_THROW(P("Y1(2"), DomainError);
  EXPECT_THROW(P("Y0(2)"), DomainError);
  EXPECT_THROW(P("Y1(2)^"), DomainError);
  EXPECT_THROW(P("Y1(2)**Y2(1)"), DomainError);
}

TEST(MonomialTest, TextRoundTripsRandomMonomials) {
  oracle::MonomialGenerator gen(4, 11);
  for (int t = 0; t < 2000; ++t) {
    const Monomial m = gen.next();
    EXPECT_EQ(P(m.to_text().c_str()), m);
    const nlohmann::json j = m;
    EXPECT_EQ(j.get<Monomial>(), m);
  }
}

TEST(MonomialTest, JsonForm) {
  const nlohmann::json j = P("Y1(2)^-1*Y2(1)");
  EXPECT_EQ(j.dump(), "[[1,2,-1],[2,1,1]]");
}

TEST(MonomialTest, Multiply) {
  EXPECT_EQ(P("Y1(2)") * P("Y1(2)^-1*Y2(1)"), P("Y2(1)"));
  EXPECT_EQ(P("Y2(4)^-1*Y3(1)") * Monomial(), P("Y2(4)^-1*Y3(1)"));
  EXPECT_EQ(multiply(P("Y3(3)"), P("Y3(3)")), P("Y3(3)^2"));
}

TEST(MonomialTest, IReduction) {
  EXPECT_EQ(i_reduction(P("Y1(2)^-1*Y2(1)"), 1), P("Y2(1)"));
  EXPECT_EQ(i_reduction(P("Y2(5)"), 2), Monomial());
  EXPECT_EQ(i_reduction(P("Y2(1)*Y3(4)"), 1), P("Y2(1)*Y3(4)"));
}

TEST(MonomialCrystalTest, Weight) {
  const MonomialCrystal c5(5), c2(2);
  EXPECT_EQ(c5.weight(P("Y3(7)")), c5.type().fundamental(3));
  EXPECT_EQ(c5.weight(P("Y4(6)*Y2(1)")), c5.type().fundamental(2) + c5.type().fundamental(4));
  EXPECT_EQ(c2.weight(P("Y1(2)^-1*Y2(1)")).to_text(), "-Λ1+Λ2");
  EXPECT_THROW(c2.weight(P("Y3(1)")), DomainError);
}

TEST(MonomialCrystalTest, StringStats) {
  const MonomialCrystal c2(2), c5(5);
  StringStats s = c2.string_stats(P("Y1(2)*Y2(2)^-1"), 2);
  EXPECT_EQ(s.epsilon, 1);
  EXPECT_EQ(s.phi, 0);
  s = c5.string_stats(P("Y3(5)"), 3);
  EXPECT_EQ(s.epsilon, 0);
  EXPECT_EQ(s.phi, 1);
  EXPECT_EQ(s.n_f, 5);
  s = c2.string_stats(P("Y1(3)^-1"), 1);
  EXPECT_EQ(s.epsilon, 1);
  EXPECT_EQ(s.phi, 0);
  EXPECT_EQ(s.n_e, 2);
  EXPECT_THROW(c2.string_stats(Monomial(), 3), DomainError);
  EXPECT_THROW(c2.string_stats(Monomial(), 0), DomainError);
}

TEST(MonomialCrystalTest, AMonomial) {
  EXPECT_EQ(MonomialCrystal(2).a_monomial(1, 1), P("Y1(1)*Y1(2)*Y2(1)^-1"));
  EXPECT_EQ(MonomialCrystal(2).a_monomial(2, 1), P("Y2(1)*Y2(2)*Y1(2)^-2"));
  EXPECT_EQ(MonomialCrystal(4).a_monomial(2, 3), P("Y2(3)*Y2(4)*Y1(4)^-1*Y3(3)^-1"));
  EXPECT_THROW(MonomialCrystal(4).a_monomial(5, 3), DomainError);
}

TEST(MonomialCrystalTest, AMonomialMatchesNaiveFormula) {
  for (int n = 2; n <= 6; ++n) {
    const MonomialCrystal c(n);
    for (int i = 1; i <= n; ++i) {
      for (std::int64_t m = -3; m <= 3; ++m) {
        EXPECT_EQ(c.a_monomial(i, m), oracle::to(oracle::naive_a(n, i, m)));
        EXPECT_EQ(c.weight(c.a_monomial(i, m)), c.type().simple_root(i));
      }
    }
  }
}

TEST(MonomialCrystalTest, Operators) {
  const MonomialCrystal c2(2);
  EXPECT_FALSE(c2.e(P("Y1(1)"), 1));
  EXPECT_EQ(c2.e(P("Y1(3)^-1"), 1), P("Y1(2)*Y2(2)^-1"));
  EXPECT_EQ(c2.e(P("Y1(2)*Y2(2)^-1"), 2), P("Y1(2)^-1*Y2(1)"));
  EXPECT_EQ(c2.f(P("Y1(1)"), 1), P("Y1(2)^-1*Y2(1)"));
  EXPECT_FALSE(c2.f(P("Y2(1)"), 1));
}

TEST(MonomialCrystalTest, FChainOfY1) {
  const MonomialCrystal c2(2);
  const std::vector<Monomial> chain = {P("Y1(1)"), P("Y1(2)^-1*Y2(1)"), P("Y1(2)*Y2(2)^-1"),
                                       P("Y1(3)^-1")};
  const int labels[] = {1, 2, 1};
  for (int t = 0; t < 3; ++t) {
    EXPECT_EQ(c2.f(chain[t], labels[t]), chain[t + 1]);
    EXPECT_FALSE(c2.f(chain[t], 3 - labels[t]));
  }
  EXPECT_FALSE(c2.f(chain[3], 1));
  EXPECT_FALSE(c2.f(chain[3], 2));
}

TEST(MonomialCrystalTest, AgreesWithNaiveOracleOnRandomMonomials) {
  for (int n = 2; n <= 5; ++n) {
    const MonomialCrystal c(n);
    oracle::MonomialGenerator gen(n, 100 + n);
    for (int t = 0; t < 2500; ++t) {
      const Monomial m = gen.next();
      const oracle::NaiveMonomial nm = oracle::from(m);
      for (int i = 1; i <= n; ++i) {
        const StringStats s = c.string_stats(m, i);
        const oracle::Naive ns = oracle::naive_stats(nm, i);
        ASSERT_EQ(s.epsilon, ns.eps) << m.to_text() << " i=" << i;
        ASSERT_EQ(s.phi, ns.phi) << m.to_text() << " i=" << i;
        if (s.phi > 0) {
          EXPECT_EQ(s.n_f, ns.n_f) << m.to_text();
        }
        if (s.epsilon > 0) {
          EXPECT_EQ(s.n_e, ns.n_e) << m.to_text();
        }
        const auto f = c.f(m, i);
        const auto nf = oracle::naive_f(n, nm, i);
        ASSERT_EQ(f.has_value(), nf.has_value());
        if (f) {
          EXPECT_EQ(*f, oracle::to(*nf));
        }
        const auto e = c.e(m, i);
        const auto ne = oracle::naive_e(n, nm, i);
        ASSERT_EQ(e.has_value(), ne.has_value());
        if (e) {
          EXPECT_EQ(*e, oracle::to(*ne));
        }
      }
    }
  }
}

TEST(MonomialCrystalTest, XMonomial) {
  const MonomialCrystal c2(2);
  EXPECT_EQ(c2.x_monomial({Letter::unbarred(1), 4}), P("Y1(4)"));
  EXPECT_EQ(c2.x_monomial({Letter::barred(2), 1}), P("Y1(2)*Y2(2)^-1"));
  EXPECT_EQ(c2.x_monomial({Letter::barred(1), 1}), P("Y1(3)^-1"));
  EXPECT_EQ(c2.x_monomial({Letter::unbarred(2), 1}), P("Y1(2)^-1*Y2(1)"));
}

TEST(MonomialCrystalTest, MkSet) {
  const MonomialCrystal c2(2);
  const std::vector<Monomial> expected = {P("Y1(1)"), P("Y1(2)^-1*Y2(1)"), P("Y1(2)*Y2(2)^-1"),
                                          P("Y1(3)^-1")};
  const auto m1 = c2.m_k_set(1, 1);
  EXPECT_EQ(std::set<Monomial>(m1.begin(), m1.end()),
            std::set<Monomial>(expected.begin(), expected.end()));
  EXPECT_EQ(c2.m_k_set(1, 1).size(), 4u);
  EXPECT_EQ(MonomialCrystal(5).m_k_set(3, 1).size(), 110u);
  EXPECT_THROW(c2.m_k_set(0, 1), DomainError);
  EXPECT_THROW(c2.m_k_set(5, 1), DomainError);
  EXPECT_EQ(c2.m_k_set(4, 1), std::vector<Monomial>{Monomial()});
}

TEST(MonomialCrystalTest, MkSetForTopLengthIsTheZeroWeightCrystal) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(MonomialCrystal(n).m_k_set(2 * n, 3), std::vector<Monomial>{Monomial()});
  }
}

TEST(MonomialCrystalTest, MkWordsCoverBinomialManySubsets) {
  const MonomialCrystal c3(3);
  for (int k = 1; k <= 6; ++k) {
    std::size_t binom = 1;
    for (int t = 0; t < k; ++t) binom = binom * (6 - t) / (t + 1);
    const auto words = c3.m_k_words(k, 2);
    EXPECT_EQ(words.size(), binom);
    for (const auto& [w, y] : words) {
      Monomial product;
      for (int t = 0; t < k; ++t) product = product * c3.x_monomial({w[t], 2 + k - 1 - t});
      EXPECT_EQ(product, y);
    }
  }
}

TEST(ElementMeasuresTest, LengthAndHeight) {
  ElementMeasures e = element_measures({Monomial(), 3, 1}, 2);
  EXPECT_EQ(e.length, 3);
  EXPECT_EQ(e.height, 2);
  e = element_measures({Monomial(), 3, 4}, 5);
  EXPECT_EQ(e.length, 3);
  EXPECT_EQ(e.height, 4);
  e = element_measures({Monomial(), 4, 0}, 2);
  EXPECT_EQ(e.length, 4);
  EXPECT_EQ(e.height, 2);
}

TEST(ElementMeasuresTest, TaggedSetCarriesTag) {
  const auto tagged = MonomialCrystal(2).tagged_m_k_set(3, 1);
  ASSERT_EQ(tagged.size(), 4u);
  for (const auto& t : tagged) {
    EXPECT_EQ(t.length, 3);
    EXPECT_EQ(t.height(2), 2);
  }
}

}  // namespace
}  // namespace monocrystal
