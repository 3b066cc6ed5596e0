#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "findex/graph.hpp"
#include "findex/operations.hpp"

namespace findex {

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return Graph(n, std::move(edges));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle: needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  edges.push_back(Edge{0, n - 1});
  return Graph(n, std::move(edges));
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back(Edge{i, j});
  return Graph(n, std::move(edges));
}

inline Graph empty_graph(std::size_t n) { return Graph(n, {}); }

// Complete multipartite graph: the join of edgeless parts.
inline Graph complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.size() < 2) throw std::invalid_argument("complete_multipartite: needs >= 2 parts");
  std::vector<Graph> blocks;
  for (std::size_t size : parts) {
    if (size < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    blocks.push_back(empty_graph(size));
  }
  return join(blocks);
}

// Parametric graph families. Every member is built from the base graphs via
// the product operations, so the construction path is the one the closed
// forms describe. `bottleneck` takes a graph operand rather than integer
// parameters and is only reachable through the operation interface.
enum class Family {
  path,
  cycle,
  complete,
  empty,
  complete_multipartite,
  wheel,
  fan,
  windmill,
  cone,
  hypercube,
  hamming,
  torus,
  nanotube_c4,
  grid,
  fence,
  closed_fence,
  thorny_cycle,
  thorny_path,
  bottleneck,
  bridge_b,
  bridge_t3,
  comb,
  sun,
};

struct FamilySpec {
  Family family = Family::path;
  std::vector<std::int64_t> params;
};

namespace detail {

struct FamilyName {
  Family family;
  std::string_view name;
};

inline constexpr FamilyName kFamilyNames[] = {
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::empty, "empty"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::wheel, "wheel"},
    {Family::fan, "fan"},
    {Family::windmill, "windmill"},
    {Family::cone, "cone"},
    {Family::hypercube, "hypercube"},
    {Family::hamming, "hamming"},
    {Family::torus, "torus"},
    {Family::nanotube_c4, "nanotube_c4"},
    {Family::grid, "grid"},
    {Family::fence, "fence"},
    {Family::closed_fence, "closed_fence"},
    {Family::thorny_cycle, "thorny_cycle"},
    {Family::thorny_path, "thorny_path"},
    {Family::bottleneck, "bottleneck"},
    {Family::bridge_b, "bridge_b"},
    {Family::bridge_t3, "bridge_t3"},
    {Family::comb, "comb"},
    {Family::sun, "sun"},
};

inline void require_arity(const FamilySpec& spec, std::size_t arity, const char* what) {
  if (spec.params.size() != arity)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(arity) +
                                " parameter(s), got " + std::to_string(spec.params.size()));
}

inline std::size_t param_at_least(const FamilySpec& spec, std::size_t index, std::int64_t min,
                                  const char* what) {
  const std::int64_t v = spec.params.at(index);
  if (v < min)
    throw std::invalid_argument(std::string(what) + ": parameter " + std::to_string(index + 1) +
                                " must be >= " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

}  // namespace detail

inline std::string_view family_name(Family family) {
  for (const auto& entry : detail::kFamilyNames)
    if (entry.family == family) return entry.name;
  throw std::logic_error("family_name: unknown family");
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& entry : detail::kFamilyNames)
    if (entry.name == name) return entry.family;
  return std::nullopt;
}

inline Graph make_family(const FamilySpec& spec) {
  using detail::param_at_least;
  using detail::require_arity;
  switch (spec.family) {
    case Family::path:
      require_arity(spec, 1, "path");
      return path(param_at_least(spec, 0, 0, "path"));
    case Family::cycle:
      require_arity(spec, 1, "cycle");
      return cycle(param_at_least(spec, 0, 3, "cycle"));
    case Family::complete:
      require_arity(spec, 1, "complete");
      return complete(param_at_least(spec, 0, 0, "complete"));
    case Family::empty:
      require_arity(spec, 1, "empty");
      return empty_graph(param_at_least(spec, 0, 0, "empty"));
    case Family::complete_multipartite: {
      if (spec.params.size() < 2)
        throw std::invalid_argument("complete_multipartite: needs >= 2 part sizes");
      std::vector<std::size_t> parts;
      for (std::size_t i = 0; i < spec.params.size(); ++i)
        parts.push_back(param_at_least(spec, i, 1, "complete_multipartite"));
      return complete_multipartite(parts);
    }
    case Family::wheel: {
      require_arity(spec, 1, "wheel");
      const Graph parts[] = {complete(1), cycle(param_at_least(spec, 0, 3, "wheel"))};
      return join(parts);
    }
    case Family::fan: {
      require_arity(spec, 1, "fan");
      const Graph parts[] = {complete(1), path(param_at_least(spec, 0, 1, "fan"))};
      return join(parts);
    }
    case Family::windmill: {
      require_arity(spec, 1, "windmill");
      const std::size_t m = param_at_least(spec, 0, 1, "windmill");
      const std::vector<Graph> blades(m, complete(2));
      const Graph parts[] = {complete(1), disjoint_union(blades)};
      return join(parts);
    }
    case Family::cone: {
      require_arity(spec, 2, "cone");
      const Graph parts[] = {cycle(param_at_least(spec, 0, 3, "cone")),
                             empty_graph(param_at_least(spec, 1, 1, "cone"))};
      return join(parts);
    }
    case Family::hypercube: {
      require_arity(spec, 1, "hypercube");
      const std::vector<Graph> factors(param_at_least(spec, 0, 1, "hypercube"), complete(2));
      return cartesian_product(factors);
    }
    case Family::hamming: {
      if (spec.params.empty()) throw std::invalid_argument("hamming: needs >= 1 parameter");
      std::vector<Graph> factors;
      for (std::size_t i = 0; i < spec.params.size(); ++i)
        factors.push_back(complete(param_at_least(spec, i, 1, "hamming")));
      return cartesian_product(factors);
    }
    case Family::torus: {
      if (spec.params.empty()) throw std::invalid_argument("torus: needs >= 1 parameter");
      std::vector<Graph> factors;
      for (std::size_t i = 0; i < spec.params.size(); ++i)
        factors.push_back(cycle(param_at_least(spec, i, 3, "torus")));
      return cartesian_product(factors);
    }
    case Family::nanotube_c4:
      require_arity(spec, 2, "nanotube_c4");
      return cartesian_product(path(param_at_least(spec, 0, 1, "nanotube_c4")),
                               cycle(param_at_least(spec, 1, 3, "nanotube_c4")));
    case Family::grid:
      require_arity(spec, 2, "grid");
      return cartesian_product(path(param_at_least(spec, 0, 1, "grid")),
                               path(param_at_least(spec, 1, 1, "grid")));
    case Family::fence:
      require_arity(spec, 1, "fence");
      return composition(path(param_at_least(spec, 0, 1, "fence")), path(2));
    case Family::closed_fence:
      require_arity(spec, 1, "closed_fence");
      return composition(cycle(param_at_least(spec, 0, 3, "closed_fence")), path(2));
    case Family::thorny_cycle: {
      require_arity(spec, 2, "thorny_cycle");
      const std::size_t n = param_at_least(spec, 0, 3, "thorny_cycle");
      return t_thorn(cycle(n), static_cast<std::int64_t>(param_at_least(spec, 1, 1, "thorny_cycle")));
    }
    case Family::thorny_path: {
      require_arity(spec, 2, "thorny_path");
      const std::size_t n = param_at_least(spec, 0, 1, "thorny_path");
      return t_thorn(path(n), static_cast<std::int64_t>(param_at_least(spec, 1, 1, "thorny_path")));
    }
    case Family::bottleneck:
      throw std::invalid_argument("bottleneck: takes a graph operand; apply the corona path");
    case Family::bridge_b:
      require_arity(spec, 1, "bridge_b");
      return corona(path(param_at_least(spec, 0, 1, "bridge_b")), empty_graph(2));
    case Family::bridge_t3:
      require_arity(spec, 1, "bridge_t3");
      return corona(path(param_at_least(spec, 0, 1, "bridge_t3")), complete(2));
    case Family::comb: {
      require_arity(spec, 1, "comb");
      const std::size_t n = param_at_least(spec, 0, 1, "comb");
      return cluster_product(path(n), RootedGraph(path(n), 0));
    }
    case Family::sun: {
      require_arity(spec, 2, "sun");
      const std::size_t m = param_at_least(spec, 0, 3, "sun");
      const std::size_t n = param_at_least(spec, 1, 1, "sun");
      return cluster_product(cycle(m), RootedGraph(path(n + 1), 0));
    }
  }
  throw std::logic_error("make_family: unknown family");
}

}  // namespace findex
