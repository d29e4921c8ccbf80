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

// Generic finite-crystal machinery: closure under the Kashiwara operators,
// highest-weight detection, decomposition of a closed set, the tensor-pair
// combinator, and DOT / JSON export.

#ifndef MONOCRYSTAL_CRYSTAL_GRAPH_HPP_
#define MONOCRYSTAL_CRYSTAL_GRAPH_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "monocrystal/errors.hpp"
#include "monocrystal/root_data.hpp"

namespace monocrystal {

// A crystal object: operators and statistics on its element type. Elements
// must be totally ordered values so sets of them can be deduplicated.
template <class C>
concept Crystal = requires(const C& c, const typename C::element_type& x, int i) {
  requires std::totally_ordered<typename C::element_type>;
  { c.rank() } -> std::convertible_to<int>;
  { c.weight(x) } -> std::same_as<Weight>;
  { c.e(x, i) } -> std::same_as<std::optional<typename C::element_type>>;
  { c.f(x, i) } -> std::same_as<std::optional<typename C::element_type>>;
  { c.epsilon(x, i) } -> std::convertible_to<std::int64_t>;
  { c.phi(x, i) } -> std::convertible_to<std::int64_t>;
  { c.to_text(x) } -> std::convertible_to<std::string>;
};

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

struct GraphEdge {
  std::size_t source = 0;
  int label = 0;
  std::size_t target = 0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

template <class E>
class CrystalGraph {
 public:
  const std::vector<E>& vertices() const noexcept { return vertices_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  std::optional<std::size_t> find(const E& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const E& x) const { return index_.contains(x); }

  // Returns true when x was new.
  bool insert(const E& x) {
    auto [it, fresh] = index_.emplace(x, vertices_.size());
    if (fresh) vertices_.push_back(x);
    return fresh;
  }
  void add_edge(GraphEdge e) { edges_.push_back(e); }

 private:
  std::vector<E> vertices_;
  std::map<E, std::size_t> index_;
  std::vector<GraphEdge> edges_;
};

template <Crystal C>
bool is_highest_weight(const C& crystal, const typename C::element_type& x) {
  for (int i = 1; i <= crystal.rank(); ++i) {
    if (crystal.epsilon(x, i) != 0) return false;
  }
  return true;
}

// Breadth-first closure of the seeds under every e_i and f_i. Seeds are
// sorted first; neighbours are visited as f_1..f_n then e_1..e_n, so vertex
// order is deterministic. Edges are the graph of f over the vertices, sorted
// by (source, label).
template <Crystal C>
CrystalGraph<typename C::element_type> generate_closure(
    const C& crystal, std::vector<typename C::element_type> seeds,
    std::size_t vertex_budget = kDefaultVertexBudget) {
  using E = typename C::element_type;
  std::sort(seeds.begin(), seeds.end());
  CrystalGraph<E> graph;
  std::deque<E> frontier;
  auto visit = [&](const E& x) {
    if (graph.contains(x)) return;
    if (graph.size() >= vertex_budget) {
      throw ResourceError("crystal closure exceeded the vertex budget of " +
                          std::to_string(vertex_budget));
    }
    graph.insert(x);
    frontier.push_back(x);
  };
  for (const E& s : seeds) visit(s);
  while (!frontier.empty()) {
    const E x = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i <= crystal.rank(); ++i) {
      if (auto y = crystal.f(x, i)) visit(*y);
    }
    for (int i = 1; i <= crystal.rank(); ++i) {
      if (auto y = crystal.e(x, i)) visit(*y);
    }
  }
  for (std::size_t v = 0; v < graph.size(); ++v) {
    for (int i = 1; i <= crystal.rank(); ++i) {
      if (auto y = crystal.f(graph.vertices()[v], i)) {
        graph.add_edge({v, i, *graph.find(*y)});
      }
    }
  }
  return graph;
}

// True when every e_i / f_i image of an element of the set is null or in the set.
template <Crystal C>
bool is_closed(const C& crystal, const std::set<typename C::element_type>& elements) {
  for (const auto& x : elements) {
    for (int i = 1; i <= crystal.rank(); ++i) {
      auto up = crystal.e(x, i);
      if (up && !elements.contains(*up)) return false;
      auto down = crystal.f(x, i);
      if (down && !elements.contains(*down)) return false;
    }
  }
  return true;
}

template <class E>
struct Component {
  Weight lambda;
  std::size_t size = 0;
  E witness;
};

// Multiset of irreducible components B(lambda), each with a highest-weight
// witness. Components are kept sorted by (lambda, size).
template <class E>
struct Decomposition {
  std::vector<Component<E>> components;

  std::size_t total_size() const {
    std::size_t total = 0;
    for (const auto& c : components) total += c.size;
    return total;
  }
  // Sorted multiset of highest weights; witnesses are ignored.
  std::vector<Weight> weights() const {
    std::vector<Weight> out;
    for (const auto& c : components) out.push_back(c.lambda);
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Splits a finite closed set into connected components, one per
// highest-weight element. Throws ContractViolation if the set is not closed
// and InternalInvariantError if the components fail to partition it.
template <Crystal C>
Decomposition<typename C::element_type> decompose_set(
    const C& crystal, const std::set<typename C::element_type>& elements,
    std::size_t vertex_budget = kDefaultVertexBudget) {
  using E = typename C::element_type;
  if (!is_closed(crystal, elements)) {
    throw ContractViolation("decompose_set: input is not closed under e_i and f_i");
  }
  Decomposition<E> out;
  std::set<E> covered;
  for (const E& x : elements) {
    if (!is_highest_weight(crystal, x)) continue;
    auto component = generate_closure(crystal, {x}, vertex_budget);
    for (const E& v : component.vertices()) {
      if (!covered.insert(v).second) {
        throw InternalInvariantError("decompose_set: components overlap at " +
                                     std::string(crystal.to_text(v)));
      }
    }
    const Weight lambda = crystal.weight(x);
    if (!lambda.dominant()) {
      throw InternalInvariantError("decompose_set: highest weight " + lambda.to_text() +
                                   " is not dominant");
    }
    out.components.push_back({lambda, component.size(), x});
  }
  if (covered.size() != elements.size()) {
    throw InternalInvariantError("decompose_set: components cover " +
                                 std::to_string(covered.size()) + " of " +
                                 std::to_string(elements.size()) + " elements");
  }
  std::stable_sort(out.components.begin(), out.components.end(),
                   [](const Component<E>& a, const Component<E>& b) {
                     if (a.lambda != b.lambda) return a.lambda < b.lambda;
                     return a.size < b.size;
                   });
  return out;
}

template <class L, class R>
struct TensorPair {
  L left;
  R right;

  friend bool operator==(const TensorPair&, const TensorPair&) = default;
  friend auto operator<=>(const TensorPair&, const TensorPair&) = default;
};

// b1 (x) b2 with the tensor rule: e_i acts on the left factor iff
// phi_i(b1) >= eps_i(b2), f_i iff phi_i(b1) > eps_i(b2).
template <Crystal Left, Crystal Right>
class TensorCrystal {
 public:
  using left_type = typename Left::element_type;
  using right_type = typename Right::element_type;
  using element_type = TensorPair<left_type, right_type>;

  TensorCrystal(Left left, Right right) : left_(std::move(left)), right_(std::move(right)) {}

  int rank() const { return left_.rank(); }
  const Left& left() const { return left_; }
  const Right& right() const { return right_; }

  Weight weight(const element_type& p) const {
    return left_.weight(p.left) + right_.weight(p.right);
  }
  std::int64_t epsilon(const element_type& p, int i) const {
    return std::max<std::int64_t>(left_.epsilon(p.left, i),
                                  right_.epsilon(p.right, i) - left_.weight(p.left).pairing(i));
  }
  std::int64_t phi(const element_type& p, int i) const {
    return std::max<std::int64_t>(right_.phi(p.right, i),
                                  left_.phi(p.left, i) + right_.weight(p.right).pairing(i));
  }
  std::optional<element_type> e(const element_type& p, int i) const {
    if (left_.phi(p.left, i) >= right_.epsilon(p.right, i)) {
      auto l = left_.e(p.left, i);
      if (!l) return std::nullopt;
      return element_type{std::move(*l), p.right};
    }
    auto r = right_.e(p.right, i);
    if (!r) return std::nullopt;
    return element_type{p.left, std::move(*r)};
  }
  std::optional<element_type> f(const element_type& p, int i) const {
    if (left_.phi(p.left, i) > right_.epsilon(p.right, i)) {
      auto l = left_.f(p.left, i);
      if (!l) return std::nullopt;
      return element_type{std::move(*l), p.right};
    }
    auto r = right_.f(p.right, i);
    if (!r) return std::nullopt;
    return element_type{p.left, std::move(*r)};
  }
  std::string to_text(const element_type& p) const {
    return std::string(left_.to_text(p.left)) + " ⊗ " + std::string(right_.to_text(p.right));
  }

 private:
  Left left_;
  Right right_;
};

// Every element of a finite set crossed with every element of another.
template <class L, class R>
std::set<TensorPair<L, R>> tensor_elements(const std::vector<L>& left,
                                          const std::vector<R>& right) {
  std::set<TensorPair<L, R>> out;
  for (const L& l : left) {
    for (const R& r : right) out.insert({l, r});
  }
  return out;
}

enum class ExportFormat { kDot, kJson };

template <Crystal C>
std::string export_dot(const C& crystal, const CrystalGraph<typename C::element_type>& graph) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t v = 0; v < graph.size(); ++v) {
    out << "  v" << v << " [label=\"" << crystal.to_text(graph.vertices()[v]) << "\"];\n";
  }
  for (const GraphEdge& e : graph.edges()) {
    out << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// {"vertices": [text, ...], "edges": [[src, label, dst], ...]}
template <Crystal C>
nlohmann::json graph_to_json(const C& crystal, const CrystalGraph<typename C::element_type>& graph) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : graph.vertices()) vertices.push_back(crystal.to_text(v));
  nlohmann::json edges = nlohmann::json::array();
  for (const GraphEdge& e : graph.edges()) edges.push_back({e.source, e.label, e.target});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

template <Crystal C>
std::string export_graph(const C& crystal, const CrystalGraph<typename C::element_type>& graph,
                         ExportFormat format) {
  if (format == ExportFormat::kDot) return export_dot(crystal, graph);
  return graph_to_json(crystal, graph).dump() + "\n";
}

}  // namespace monocrystal

#endif  // MONOCRYSTAL_CRYSTAL_GRAPH_HPP_
