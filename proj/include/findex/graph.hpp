#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "findex/checked_int.hpp"

namespace findex {

// Unordered vertex pair; canonical form keeps the smaller index first.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertex indices [0, n).
//
// Edges are stored as a sorted, duplicate-free vector of (min,max) pairs, so
// two graphs with the same labeling compare equal. Degrees are precomputed at
// construction; after that every query is const and the object is safe to
// share across threads.
class Graph {
 public:
  Graph() = default;

  // Collapses duplicate pairs (set semantics). Rejects self-loops and
  // endpoints outside [0, n).
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
      if (e.u == e.v)
        throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.v >= n_)
        throw std::invalid_argument("Graph: endpoint " + std::to_string(e.v) +
                                    " out of range for n=" + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    degrees_.assign(n_, 0);
    for (const Edge& e : edges_) {
      ++degrees_[e.u];
      ++degrees_[e.v];
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t degree(std::size_t v) const {
    if (v >= n_)
      throw std::out_of_range("Graph::degree: vertex " + std::to_string(v) +
                              " out of range for n=" + std::to_string(n_));
    return degrees_[v];
  }

  const std::vector<std::size_t>& degrees() const { return degrees_; }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

// A graph with one distinguished vertex, the operand of cluster, splice,
// link and bridge constructions.
class RootedGraph {
 public:
  RootedGraph(Graph graph, std::size_t root) : graph_(std::move(graph)), root_(root) {
    if (root_ >= graph_.vertex_count())
      throw std::out_of_range("RootedGraph: root " + std::to_string(root_) +
                              " out of range for n=" + std::to_string(graph_.vertex_count()));
  }

  const Graph& graph() const { return graph_; }
  std::size_t root() const { return root_; }
  std::size_t root_degree() const { return graph_.degree(root_); }

 private:
  Graph graph_;
  std::size_t root_ = 0;
};

namespace detail {
inline CheckedInt to_checked(std::size_t v) {
  if (v > static_cast<std::size_t>(INT64_MAX))
    throw std::overflow_error("value exceeds 64-bit signed range");
  return CheckedInt(static_cast<std::int64_t>(v));
}
}  // namespace detail

// F-index: sum of cubes of vertex degrees.
inline CheckedInt f_index(const Graph& g) {
  CheckedInt total = 0;
  for (std::size_t d : g.degrees()) total += cube(detail::to_checked(d));
  return total;
}

// F-index in its edge-sum form, sum over edges of d(u)^2 + d(v)^2.
// Equals f_index on every graph; isolated vertices contribute 0 to both.
inline CheckedInt f_index_edge_sum(const Graph& g) {
  CheckedInt total = 0;
  for (const Edge& e : g.edges()) {
    CheckedInt du = detail::to_checked(g.degree(e.u));
    CheckedInt dv = detail::to_checked(g.degree(e.v));
    total += square(du) + square(dv);
  }
  return total;
}

// First Zagreb index, sum of squared degrees. Both the vertex-sum and the
// edge-sum form are computed and must agree.
inline CheckedInt first_zagreb(const Graph& g) {
  CheckedInt vertex_sum = 0;
  for (std::size_t d : g.degrees()) vertex_sum += square(detail::to_checked(d));
  CheckedInt edge_sum = 0;
  for (const Edge& e : g.edges())
    edge_sum += detail::to_checked(g.degree(e.u)) + detail::to_checked(g.degree(e.v));
  if (vertex_sum != edge_sum)
    throw std::logic_error("first_zagreb: vertex-sum and edge-sum forms disagree");
  return vertex_sum;
}

// Second Zagreb index, sum over edges of d(u)*d(v).
inline CheckedInt second_zagreb(const Graph& g) {
  CheckedInt total = 0;
  for (const Edge& e : g.edges())
    total += detail::to_checked(g.degree(e.u)) * detail::to_checked(g.degree(e.v));
  return total;
}

// The invariant tuple (n, m, M1, F) that the closed-form evaluators consume
// in place of the graph itself.
struct GraphSummary {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t m1 = 0;  // first Zagreb index
  std::int64_t f = 0;   // F-index
  friend constexpr auto operator<=>(const GraphSummary&, const GraphSummary&) = default;
};

inline GraphSummary summarize(const Graph& g) {
  return GraphSummary{detail::to_checked(g.vertex_count()).value(),
                      detail::to_checked(g.edge_count()).value(), first_zagreb(g).value(),
                      f_index(g).value()};
}

// True iff g has a single connected component. The empty graph counts as
// connected; it keeps the harness total.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

}  // namespace findex
