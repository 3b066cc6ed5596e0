#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "findex/graph.hpp"

namespace findex {

// Nonempty set of vertex indices of the second operand of a hierarchical
// product. Membership is range-checked against that operand at use time.
class VertexSubset {
 public:
  explicit VertexSubset(std::vector<std::size_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) throw std::invalid_argument("VertexSubset: must be nonempty");
  }

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(std::size_t v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

 private:
  std::vector<std::size_t> members_;
};

namespace detail {

inline std::size_t checked_size_mul(std::size_t a, std::size_t b) {
  std::size_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("product graph vertex count overflows");
  return r;
}

inline void require_nonempty_list(std::size_t count, const char* op) {
  if (count == 0) throw std::invalid_argument(std::string(op) + ": operand list is empty");
}

inline void require_vertices(const Graph& g, const char* op) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument(std::string(op) + ": operand must have at least one vertex");
}

// Postcondition check: every vertex degree of the result must match the
// closed degree rule of the construction.
inline void check_degree_rule(const Graph& g, const char* op,
                              const std::function<std::size_t(std::size_t)>& expected) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != expected(v))
      throw std::logic_error(std::string(op) + ": degree rule violated at vertex " +
                             std::to_string(v));
  }
}

// Row-major pair index of a binary product vertex.
inline std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n2) {
  return a * n2 + b;
}

// Dense adjacency lookup; product constructors probe all vertex pairs.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const Graph& g) : n_(g.vertex_count()), bits_(n_ * n_, false) {
    for (const Edge& e : g.edges()) {
      bits_[e.u * n_ + e.v] = true;
      bits_[e.v * n_ + e.u] = true;
    }
  }
  bool operator()(std::size_t u, std::size_t v) const { return bits_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

}  // namespace detail

// Disjoint union; vertices of the i-th operand are offset by the total size
// of the operands before it.
inline Graph disjoint_union(std::span<const Graph> parts) {
  detail::require_nonempty_list(parts.size(), "disjoint_union");
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (const Graph& g : parts) {
    for (const Edge& e : g.edges()) edges.push_back(Edge{n + e.u, n + e.v});
    n += g.vertex_count();
  }
  Graph result(n, std::move(edges));

  std::size_t offset = 0;
  std::vector<std::size_t> expected(n);
  for (const Graph& g : parts) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) expected[offset + v] = g.degree(v);
    offset += g.vertex_count();
  }
  detail::check_degree_rule(result, "disjoint_union",
                            [&expected](std::size_t v) { return expected[v]; });
  return result;
}

// Join: disjoint union plus every edge between vertices of distinct
// operands. Degree rule: d(v) = d_i(v) + n - n_i for v from operand i.
inline Graph join(std::span<const Graph> parts) {
  detail::require_nonempty_list(parts.size(), "join");
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  std::vector<Edge> edges;
  for (const Graph& g : parts) {
    offsets.push_back(n);
    for (const Edge& e : g.edges()) edges.push_back(Edge{n + e.u, n + e.v});
    n += g.vertex_count();
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (std::size_t u = 0; u < parts[i].vertex_count(); ++u)
        for (std::size_t v = 0; v < parts[j].vertex_count(); ++v)
          edges.push_back(Edge{offsets[i] + u, offsets[j] + v});
    }
  }
  Graph result(n, std::move(edges));

  std::vector<std::size_t> expected(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t v = 0; v < parts[i].vertex_count(); ++v)
      expected[offsets[i] + v] = parts[i].degree(v) + n - parts[i].vertex_count();
  }
  detail::check_degree_rule(result, "join", [&expected](std::size_t v) { return expected[v]; });
  return result;
}

namespace detail {

// Binary Cartesian product with row-major labeling.
inline Graph cartesian_binary(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  const std::size_t n = checked_size_mul(n1, n2);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n1; ++a)
    for (const Edge& e : g2.edges())
      edges.push_back(Edge{pair_index(a, e.u, n2), pair_index(a, e.v, n2)});
  for (const Edge& e : g1.edges())
    for (std::size_t b = 0; b < n2; ++b)
      edges.push_back(Edge{pair_index(e.u, b, n2), pair_index(e.v, b, n2)});
  return Graph(n, std::move(edges));
}

}  // namespace detail

// Cartesian product, k-ary by left fold of the binary product. A vertex is
// a coordinate tuple in row-major order; its degree is the sum of its
// coordinate degrees.
inline Graph cartesian_product(std::span<const Graph> parts) {
  detail::require_nonempty_list(parts.size(), "cartesian_product");
  for (const Graph& g : parts) detail::require_vertices(g, "cartesian_product");
  Graph result = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    result = detail::cartesian_binary(result, parts[i]);

  detail::check_degree_rule(result, "cartesian_product", [&parts](std::size_t v) {
    std::size_t expected = 0;
    for (std::size_t i = parts.size(); i-- > 0;) {
      const std::size_t ni = parts[i].vertex_count();
      expected += parts[i].degree(v % ni);
      v /= ni;
    }
    return expected;
  });
  return result;
}

inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const Graph parts[] = {g1, g2};
  return cartesian_product(std::span<const Graph>(parts));
}

// Composition (lexicographic product). (u1,u2)~(v1,v2) iff u1v1 is an edge
// of the first operand, or u1 = v1 and u2v2 is an edge of the second.
// Degree rule: d(a,b) = n2*d1(a) + d2(b).
inline Graph composition(const Graph& g1, const Graph& g2) {
  detail::require_vertices(g1, "composition");
  detail::require_vertices(g2, "composition");
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  const std::size_t n = detail::checked_size_mul(n1, n2);
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges())
    for (std::size_t b = 0; b < n2; ++b)
      for (std::size_t b2 = 0; b2 < n2; ++b2)
        edges.push_back(Edge{detail::pair_index(e.u, b, n2), detail::pair_index(e.v, b2, n2)});
  for (std::size_t a = 0; a < n1; ++a)
    for (const Edge& e : g2.edges())
      edges.push_back(Edge{detail::pair_index(a, e.u, n2), detail::pair_index(a, e.v, n2)});
  Graph result(n, std::move(edges));

  detail::check_degree_rule(result, "composition", [&](std::size_t v) {
    return n2 * g1.degree(v / n2) + g2.degree(v % n2);
  });
  return result;
}

// Tensor (Kronecker) product. (u1,u2)~(v1,v2) iff both coordinate pairs are
// edges. Degree rule: d(a,b) = d1(a)*d2(b). The result may be disconnected.
inline Graph tensor_product(const Graph& g1, const Graph& g2) {
  detail::require_vertices(g1, "tensor_product");
  detail::require_vertices(g2, "tensor_product");
  const std::size_t n2 = g2.vertex_count();
  const std::size_t n = detail::checked_size_mul(g1.vertex_count(), n2);
  std::vector<Edge> edges;
  for (const Edge& e1 : g1.edges()) {
    for (const Edge& e2 : g2.edges()) {
      edges.push_back(Edge{detail::pair_index(e1.u, e2.u, n2), detail::pair_index(e1.v, e2.v, n2)});
      edges.push_back(Edge{detail::pair_index(e1.u, e2.v, n2), detail::pair_index(e1.v, e2.u, n2)});
    }
  }
  Graph result(n, std::move(edges));

  detail::check_degree_rule(result, "tensor_product", [&](std::size_t v) {
    return g1.degree(v / n2) * g2.degree(v % n2);
  });
  return result;
}

// Strong product: union of Cartesian and tensor adjacency.
// Degree rule: d(a,b) = d1(a) + d2(b) + d1(a)*d2(b).
inline Graph strong_product(const Graph& g1, const Graph& g2) {
  detail::require_vertices(g1, "strong_product");
  detail::require_vertices(g2, "strong_product");
  const std::size_t n2 = g2.vertex_count();
  Graph cart = detail::cartesian_binary(g1, g2);
  std::vector<Edge> edges = cart.edges();
  for (const Edge& e1 : g1.edges()) {
    for (const Edge& e2 : g2.edges()) {
      edges.push_back(Edge{detail::pair_index(e1.u, e2.u, n2), detail::pair_index(e1.v, e2.v, n2)});
      edges.push_back(Edge{detail::pair_index(e1.u, e2.v, n2), detail::pair_index(e1.v, e2.u, n2)});
    }
  }
  Graph result(cart.vertex_count(), std::move(edges));

  detail::check_degree_rule(result, "strong_product", [&](std::size_t v) {
    const std::size_t d1 = g1.degree(v / n2), d2 = g2.degree(v % n2);
    return d1 + d2 + d1 * d2;
  });
  return result;
}

// Corona product: one copy of the first operand and n1 copies of the second;
// vertex i of the first is joined to every vertex of the i-th copy.
// Copy i occupies indices [n1 + i*n2, n1 + (i+1)*n2).
inline Graph corona(const Graph& g1, const Graph& g2) {
  detail::require_vertices(g1, "corona");
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  const std::size_t n = n1 + detail::checked_size_mul(n1, n2);
  std::vector<Edge> edges = g1.edges();
  for (std::size_t i = 0; i < n1; ++i) {
    const std::size_t base = n1 + i * n2;
    for (const Edge& e : g2.edges()) edges.push_back(Edge{base + e.u, base + e.v});
    for (std::size_t b = 0; b < n2; ++b) edges.push_back(Edge{i, base + b});
  }
  Graph result(n, std::move(edges));

  if (result.edge_count() != g1.edge_count() + n1 * g2.edge_count() + n1 * n2)
    throw std::logic_error("corona: edge count mismatch");
  detail::check_degree_rule(result, "corona", [&](std::size_t v) {
    if (v < n1) return g1.degree(v) + n2;
    return g2.degree((v - n1) % n2) + 1;
  });
  return result;
}

// t-thorn graph: t pendant vertices attached to every vertex; exactly the
// corona with an edgeless second operand. t = 0 is rejected to keep the
// operation on the same domain as its closed form.
inline Graph t_thorn(const Graph& g, std::int64_t thorns) {
  if (thorns < 1) throw std::invalid_argument("t_thorn: thorn count must be >= 1");
  return corona(g, Graph(static_cast<std::size_t>(thorns), {}));
}

// Generalized hierarchical product. Second-coordinate moves follow edges of
// the second operand anywhere; first-coordinate moves are allowed only when
// the second coordinate lies in U.
inline Graph hierarchical_product(const Graph& g1, const Graph& g2, const VertexSubset& u) {
  detail::require_vertices(g1, "hierarchical_product");
  detail::require_vertices(g2, "hierarchical_product");
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  if (u.members().back() >= n2)
    throw std::invalid_argument("hierarchical_product: subset member out of range");
  const std::size_t n = detail::checked_size_mul(n1, n2);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n1; ++a)
    for (const Edge& e : g2.edges())
      edges.push_back(Edge{detail::pair_index(a, e.u, n2), detail::pair_index(a, e.v, n2)});
  for (const Edge& e : g1.edges())
    for (std::size_t b : u.members())
      edges.push_back(Edge{detail::pair_index(e.u, b, n2), detail::pair_index(e.v, b, n2)});
  Graph result(n, std::move(edges));

  detail::check_degree_rule(result, "hierarchical_product", [&](std::size_t v) {
    const std::size_t d2 = g2.degree(v % n2);
    return u.contains(v % n2) ? g1.degree(v / n2) + d2 : d2;
  });
  return result;
}

// Cluster product: the root of the i-th copy of the second operand is
// identified with vertex i of the first. Constructed as the hierarchical
// product with U = {root}, which is the same graph vertex for vertex.
inline Graph cluster_product(const Graph& g1, const RootedGraph& g2) {
  return hierarchical_product(g1, g2.graph(), VertexSubset({g2.root()}));
}

namespace detail {

// Shared pair scan for disjunction and symmetric difference.
template <typename Pred>
Graph pairwise_product(const Graph& g1, const Graph& g2, const char* op, Pred&& adjacent) {
  require_vertices(g1, op);
  require_vertices(g2, op);
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  const std::size_t n = checked_size_mul(n1, n2);
  const AdjacencyMatrix adj1(g1), adj2(g2);
  std::vector<Edge> edges;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const bool first = adj1(p / n2, q / n2);
      const bool second = adj2(p % n2, q % n2);
      if (adjacent(first, second)) edges.push_back(Edge{p, q});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace detail

// Disjunction: pairs adjacent when either coordinate pair is an edge.
// Degree rule: d(a,b) = n2*d1(a) + n1*d2(b) - d1(a)*d2(b).
inline Graph disjunction(const Graph& g1, const Graph& g2) {
  Graph result = detail::pairwise_product(g1, g2, "disjunction",
                                          [](bool a, bool b) { return a || b; });
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  detail::check_degree_rule(result, "disjunction", [&](std::size_t v) {
    const std::size_t d1 = g1.degree(v / n2), d2 = g2.degree(v % n2);
    return n2 * d1 + n1 * d2 - d1 * d2;
  });
  return result;
}

// Symmetric difference: adjacent when exactly one coordinate pair is an edge.
// Degree rule: d(a,b) = n2*d1(a) + n1*d2(b) - 2*d1(a)*d2(b).
inline Graph symmetric_difference(const Graph& g1, const Graph& g2) {
  Graph result = detail::pairwise_product(g1, g2, "symmetric_difference",
                                          [](bool a, bool b) { return a != b; });
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  detail::check_degree_rule(result, "symmetric_difference", [&](std::size_t v) {
    const std::size_t d1 = g1.degree(v / n2), d2 = g2.degree(v % n2);
    return n2 * d1 + n1 * d2 - 2 * d1 * d2;
  });
  return result;
}

// Splice: the two roots are identified. First-operand vertices keep their
// indices; the remaining second-operand vertices follow in index order.
inline Graph splice(const RootedGraph& g1, const RootedGraph& g2) {
  const std::size_t n1 = g1.graph().vertex_count();
  const std::size_t n2 = g2.graph().vertex_count();
  const auto map2 = [&](std::size_t w) {
    if (w == g2.root()) return g1.root();
    return n1 + (w < g2.root() ? w : w - 1);
  };
  std::vector<Edge> edges = g1.graph().edges();
  for (const Edge& e : g2.graph().edges()) edges.push_back(Edge{map2(e.u), map2(e.v)});
  Graph result(n1 + n2 - 1, std::move(edges));

  detail::check_degree_rule(result, "splice", [&](std::size_t v) {
    if (v == g1.root()) return g1.root_degree() + g2.root_degree();
    if (v < n1) return g1.graph().degree(v);
    const std::size_t w = v - n1;
    return g2.graph().degree(w < g2.root() ? w : w + 1);
  });
  return result;
}

// Link: a new edge joins the two roots in the disjoint union.
inline Graph link(const RootedGraph& g1, const RootedGraph& g2) {
  const std::size_t n1 = g1.graph().vertex_count();
  std::vector<Edge> edges = g1.graph().edges();
  for (const Edge& e : g2.graph().edges()) edges.push_back(Edge{n1 + e.u, n1 + e.v});
  edges.push_back(Edge{g1.root(), n1 + g2.root()});
  Graph result(n1 + g2.graph().vertex_count(), std::move(edges));

  detail::check_degree_rule(result, "link", [&](std::size_t v) {
    const bool is_root = v == g1.root() || v == n1 + g2.root();
    const std::size_t base = v < n1 ? g1.graph().degree(v) : g2.graph().degree(v - n1);
    return base + (is_root ? 1 : 0);
  });
  return result;
}

// Bridge graph: the blocks are laid out in order and consecutive roots are
// joined by an edge. A single block is returned unchanged.
inline Graph bridge(std::span<const RootedGraph> blocks) {
  detail::require_nonempty_list(blocks.size(), "bridge");
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  std::vector<Edge> edges;
  for (const RootedGraph& b : blocks) {
    offsets.push_back(n);
    for (const Edge& e : b.graph().edges()) edges.push_back(Edge{n + e.u, n + e.v});
    n += b.graph().vertex_count();
  }
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    edges.push_back(Edge{offsets[i] + blocks[i].root(), offsets[i + 1] + blocks[i + 1].root()});
  Graph result(n, std::move(edges));

  detail::check_degree_rule(result, "bridge", [&](std::size_t v) {
    std::size_t i = offsets.size() - 1;
    while (offsets[i] > v) --i;
    const std::size_t w = v - offsets[i];
    std::size_t gain = 0;
    if (w == blocks[i].root()) gain = (i > 0 ? 1 : 0) + (i + 1 < blocks.size() ? 1 : 0);
    return blocks[i].graph().degree(w) + gain;
  });
  return result;
}

}  // namespace findex
