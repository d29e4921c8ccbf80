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

// Algebraic property checks shared by the property tests and the
// acceptance runner. Each returns how many instances were checked and the
// first counterexample, if any.

#ifndef MONOCRYSTAL_TESTS_PROPERTIES_HPP_
#define MONOCRYSTAL_TESTS_PROPERTIES_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monocrystal/monomial.hpp"
#include "monocrystal/product.hpp"
#include "oracle.hpp"

namespace properties {

using monocrystal::CartanType;
using monocrystal::Monomial;
using monocrystal::MonomialCrystal;

struct Result {
  explicit Result(std::string label) : name(std::move(label)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0 && checks > 0; }
};

inline constexpr int kMaxRank = 4;
inline constexpr std::size_t kRandomMonomials = 10'000;

struct Corpus {
  int rank;
  std::vector<Monomial> elements;
};

// Every element of M_k(1), 1 <= k <= 2n, for n <= kMaxRank, followed by
// kRandomMonomials random monomials spread evenly over those ranks.
inline std::vector<Corpus> corpus() {
  std::vector<Corpus> out;
  const std::size_t per_rank = (kRandomMonomials + kMaxRank - 2) / (kMaxRank - 1);
  for (int n = 2; n <= kMaxRank; ++n) {
    Corpus c{n, {}};
    const MonomialCrystal crystal(n);
    std::set<Monomial> seen;
    for (int k = 1; k <= 2 * n; ++k) {
      for (const Monomial& m : crystal.m_k_set(k, 1)) {
        if (seen.insert(m).second) c.elements.push_back(m);
      }
    }
    oracle::MonomialGenerator gen(n, 2026u + static_cast<std::uint32_t>(n));
    for (std::size_t t = 0; t < per_rank; ++t) c.elements.push_back(gen.next());
    out.push_back(std::move(c));
  }
  return out;
}

inline std::string where(const Monomial& m, int n, int i) {
  std::ostringstream s;
  s << "n=" << n << " i=" << i << " M=" << m.to_text();
  return s.str();
}

inline Result inverse_pair(const std::vector<Corpus>& corpus) {
  Result r("operator inverse pair");
  for (const auto& [n, elements] : corpus) {
    const MonomialCrystal c(n);
    for (const Monomial& m : elements) {
      for (int i = 1; i <= n; ++i) {
        if (auto f = c.f(m, i)) r.expect(c.e(*f, i) == m, where(m, n, i) + " e(f(M)) != M");
        if (auto e = c.e(m, i)) r.expect(c.f(*e, i) == m, where(m, n, i) + " f(e(M)) != M");
      }
    }
  }
  return r;
}

inline Result weight_ladder(const std::vector<Corpus>& corpus) {
  Result r("weight ladder");
  for (const auto& [n, elements] : corpus) {
    const MonomialCrystal c(n);
    for (const Monomial& m : elements) {
      for (int i = 1; i <= n; ++i) {
        const auto alpha = c.type().simple_root(i);
        if (auto e = c.e(m, i)) r.expect(c.weight(*e) == c.weight(m) + alpha, where(m, n, i));
        if (auto f = c.f(m, i)) r.expect(c.weight(*f) == c.weight(m) - alpha, where(m, n, i));
      }
    }
  }
  return r;
}

inline Result string_identity(const std::vector<Corpus>& corpus) {
  Result r("phi = eps + <h, wt>");
  for (const auto& [n, elements] : corpus) {
    const MonomialCrystal c(n);
    for (const Monomial& m : elements) {
      const auto wt = c.weight(m);
      for (int i = 1; i <= n; ++i) {
        r.expect(c.phi(m, i) == c.epsilon(m, i) + wt.pairing(i), where(m, n, i));
      }
    }
  }
  return r;
}

inline Result semi_normality(const std::vector<Corpus>& corpus) {
  Result r("semi-normality string lengths");
  for (const auto& [n, elements] : corpus) {
    const MonomialCrystal c(n);
    for (const Monomial& m : elements) {
      for (int i = 1; i <= n; ++i) {
        const auto eps = c.epsilon(m, i), phi = c.phi(m, i);
        std::int64_t up = 0, down = 0;
        for (auto x = c.e(m, i); x && up <= eps; x = c.e(*x, i)) ++up;
        for (auto x = c.f(m, i); x && down <= phi; x = c.f(*x, i)) ++down;
        r.expect(up == eps && down == phi, where(m, n, i));
        // Highest weight for i iff e_i is undefined.
        r.expect((eps == 0) == !c.e(m, i), where(m, n, i) + " epsilon/e mismatch");
      }
    }
  }
  return r;
}

inline Result shift_equivariance(const std::vector<Corpus>& corpus) {
  Result r("shift equivariance");
  for (const auto& [n, elements] : corpus) {
    const MonomialCrystal c(n);
    for (const Monomial& m : elements) {
      for (std::int64_t a : {-3, 2, 7}) {
        const Monomial s = m.shifted(a);
        bool ok = c.weight(s) == c.weight(m);
        for (int i = 1; i <= n && ok; ++i) {
          const auto e = c.e(m, i), es = c.e(s, i);
          const auto f = c.f(m, i), fs = c.f(s, i);
          ok = c.epsilon(s, i) == c.epsilon(m, i) && c.phi(s, i) == c.phi(m, i) &&
               e.has_value() == es.has_value() && f.has_value() == fs.has_value() &&
               (!e || e->shifted(a) == *es) && (!f || f->shifted(a) == *fs);
        }
        r.expect(ok, "n=" + std::to_string(n) + " a=" + std::to_string(a) + " M=" + m.to_text());
      }
    }
  }
  return r;
}

inline std::string spec_text(const monocrystal::ProductSpec& s) {
  std::ostringstream out;
  out << "n=" << s.rank << " p=" << s.p << " q=" << s.q << " m=" << s.m;
  return out.str();
}

// Two-fold products M(Y_p(m)) . M(Y_q(1)), n <= kMaxRank, m <= 2n + 2, and
// sampled three-fold products for n <= 3.
inline Result product_closure() {
  Result r("closure of product sets");
  for (int n = 2; n <= kMaxRank; ++n) {
    const MonomialCrystal c(n);
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        for (std::int64_t m = 1; m <= 2 * n + 2; ++m) {
          const auto elements =
              monocrystal::product_of({c.m_k_set(p, m), c.m_k_set(q, 1)});
          r.expect(monocrystal::is_closed(c, elements), spec_text({n, p, q, m}));
        }
      }
    }
  }
  std::mt19937 rng(31);
  for (int n = 2; n <= 3; ++n) {
    const MonomialCrystal c(n);
    std::uniform_int_distribution<int> index(1, n);
    std::uniform_int_distribution<int> shift(1, 5);
    for (int t = 0; t < 40; ++t) {
      const int p1 = index(rng), p2 = index(rng), p3 = index(rng);
      const int m1 = shift(rng), m2 = shift(rng), m3 = shift(rng);
      const auto elements = monocrystal::product_of(
          {c.m_k_set(p1, m1), c.m_k_set(p2, m2), c.m_k_set(p3, m3)});
      std::ostringstream what;
      what << "n=" << n << " Y" << p1 << "(" << m1 << ") Y" << p2 << "(" << m2 << ") Y" << p3
           << "(" << m3 << ")";
      r.expect(monocrystal::is_closed(c, elements), what.str());
    }
  }
  return r;
}

// Every factorization of a highest-weight product has left factor Y_p(m).
inline Result left_factor_identity() {
  Result r("highest-weight left factor");
  for (int n = 2; n <= kMaxRank; ++n) {
    const MonomialCrystal c(n);
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        for (std::int64_t m = 1; m <= 2 * n + 2; ++m) {
          const monocrystal::ProductSpec spec{n, p, q, m};
          const auto set = monocrystal::product_set(spec);
          const Monomial top = Monomial::y(p, m);
          for (const auto& [x, factorizations] : set.factorizations) {
            if (!c.is_highest_weight(x)) continue;
            bool some = false, all = true;
            for (const auto& f : factorizations) {
              const bool left_is_top = set.left_factors[f.left] == top;
              some = some || left_is_top;
              all = all && left_is_top;
              r.expect(set.left_factors[f.left] * set.right_factors[f.right] == x,
                       spec_text(spec) + " factorization does not reproduce " + x.to_text());
            }
            r.expect(some && all, spec_text(spec) + " hw " + x.to_text());
          }
        }
      }
    }
  }
  return r;
}

// M(Y_p(m)) . M(Y_q(m)) is one component of weight Λp + Λq.
inline Result equal_height_connected() {
  Result r("equal-height connectedness");
  for (int n = 2; n <= kMaxRank; ++n) {
    const MonomialCrystal c(n);
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        for (std::int64_t m : {1, 2, 5}) {
          const auto elements = monocrystal::product_of({c.m_k_set(p, m), c.m_k_set(q, m)});
          const auto d = monocrystal::decompose_set(c, elements);
          r.expect(d.components.size() == 1 &&
                       d.components[0].lambda == c.type().fundamental_sum(p, q),
                   spec_text({n, p, q, m}));
        }
      }
    }
  }
  return r;
}

// M_k(m) equals the closure of its generator and has one highest weight.
inline Result mk_equals_closure() {
  Result r("M_k(m) = closure of the generator");
  for (int n = 2; n <= kMaxRank; ++n) {
    const MonomialCrystal c(n);
    for (int k = 1; k <= 2 * n; ++k) {
      for (std::int64_t m : {-1, 1, 3}) {
        const auto set = c.m_k_set(k, m);
        const Monomial seed =
            k <= n ? Monomial::y(k, m) : (k == 2 * n ? Monomial() : Monomial::y(2 * n - k, m - n + k));
        auto closure = monocrystal::generate_closure(c, {seed}).vertices();
        std::sort(closure.begin(), closure.end());
        const auto hw =
            std::count_if(set.begin(), set.end(), [&](const Monomial& x) { return c.is_highest_weight(x); });
        std::ostringstream what;
        what << "n=" << n << " k=" << k << " m=" << m;
        r.expect(closure == set && hw == 1, what.str());
        const int top = k <= n ? k : 2 * n - k;
        r.expect(static_cast<std::int64_t>(set.size()) ==
                     oracle::weyl_dimension(c.type().fundamental(top).to_epsilon()),
                 what.str() + " size differs from the Weyl dimension");
      }
    }
  }
  return r;
}

// Reducing row i of a monomial that is highest weight for every j != i
// keeps it highest weight for those j.
inline Result i_reduction_preserves_highest_weight(const std::vector<Corpus>& corpus) {
  Result r("i-reduction keeps highest weight");
  for (const auto& [n, elements] : corpus) {
    const MonomialCrystal c(n);
    for (const Monomial& m : elements) {
      for (int i = 1; i <= n; ++i) {
        bool hw_elsewhere = true;
        for (int j = 1; j <= n; ++j) hw_elsewhere = hw_elsewhere && (j == i || c.epsilon(m, j) == 0);
        if (!hw_elsewhere) continue;
        const Monomial reduced = monocrystal::i_reduction(m, i);
        bool ok = reduced.row(i).empty();
        for (int j = 1; j <= n; ++j) {
          if (j != i) ok = ok && c.epsilon(reduced, j) == 0;
        }
        r.expect(ok, where(m, n, i));
      }
    }
  }
  return r;
}

inline std::vector<Result> run_all() {
  const auto data = corpus();
  return {inverse_pair(data),       weight_ladder(data),    string_identity(data),
          semi_normality(data),     shift_equivariance(data), product_closure(),
          left_factor_identity(),   equal_height_connected(), mk_equals_closure(),
          i_reduction_preserves_highest_weight(data)};
}

}  // namespace properties

#endif  // MONOCRYSTAL_TESTS_PROPERTIES_HPP_
