#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "findex/formulas.hpp"
#include "findex/generators.hpp"
#include "findex/graph.hpp"
#include "findex/operations.hpp"

namespace findex {

// One seeded randomized run of the whole identity suite: for every identity,
// build the operation graph explicitly, compute F directly from degrees, and
// require exact agreement with the closed-form value on summaries.

struct TrialConfig {
  std::int64_t trials_per_identity = 200;
  std::size_t max_vertices = 8;
  std::vector<double> edge_probabilities = {0.2, 0.5, 0.8};
  std::uint64_t seed = 0;
  bool connected_only = true;  // operands only; results may still be disconnected
};

struct Counterexample {
  std::string operands;
  std::int64_t formula_value = 0;
  std::int64_t direct_value = 0;
};

struct VerificationReport {
  std::string identity;
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::optional<Counterexample> first_counterexample;
};

inline constexpr std::array<std::string_view, 17> identity_names = {
    "union",  "join",   "join-copies", "suspension",  "m1-cartesian", "cartesian",
    "composition", "tensor", "strong", "corona",      "thorn",        "hierarchical",
    "cluster",     "disjunction",      "symdiff",     "splice",       "link",
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Per-trial seed from (suite seed, identity, trial index), so trial outcomes
// do not depend on execution order or thread count.
inline std::uint64_t derive_trial_seed(std::uint64_t suite_seed, std::string_view identity,
                                       std::int64_t trial) {
  std::uint64_t x = splitmix64(suite_seed ^ fnv1a(identity));
  return splitmix64(x ^ static_cast<std::uint64_t>(trial));
}

// Uniform draw from [0, bound); bound must be positive. Plain modulo keeps
// the sampler identical across standard libraries.
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace detail

// Deterministic Erdos-Renyi G(n, p) sample.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_graph: n must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("random_graph: p must lie in (0,1)");
  std::mt19937_64 rng(seed);
  const auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() < threshold) edges.push_back(Edge{u, v});
  return Graph(n, std::move(edges));
}

// G(n, p) conditioned on connectivity: bounded resampling, then a random
// spanning tree is laid over the last sample.
inline Graph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  Graph g = random_graph(n, p, seed);
  for (std::uint64_t attempt = 1; attempt <= 32 && !is_connected(g); ++attempt)
    g = random_graph(n, p, detail::splitmix64(seed ^ attempt));
  if (is_connected(g)) return g;

  std::mt19937_64 rng(detail::splitmix64(seed ^ 0x7472656573ULL));
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[detail::pick(rng, i)]);
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 1; i < n; ++i)
    edges.push_back(Edge{order[i], order[detail::pick(rng, i)]});
  return Graph(n, std::move(edges));
}

namespace detail {

inline Graph sample_graph(std::mt19937_64& rng, const TrialConfig& config) {
  const std::size_t n = 1 + pick(rng, config.max_vertices);
  const double p = config.edge_probabilities[pick(rng, config.edge_probabilities.size())];
  const std::uint64_t seed = rng();
  return config.connected_only ? random_connected_graph(n, p, seed) : random_graph(n, p, seed);
}

inline std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.vertex_count() << " edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << ' ';
    out << e.u << '-' << e.v;
    first = false;
  }
  out << ']';
  return out.str();
}

// Nonempty subset of [0, n) by rejection sampling, so each nonempty subset is
// equally likely.
inline VertexSubset sample_subset(std::mt19937_64& rng, std::size_t n) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (rng() & 1u) members.push_back(v);
    if (!members.empty()) return VertexSubset(std::move(members));
  }
  return VertexSubset({pick(rng, n)});
}

struct TrialResult {
  CheckedInt formula;
  CheckedInt direct;
  std::string operands;
};

template <typename TrialFn>
VerificationReport run_trials(std::string_view identity, const TrialConfig& config,
                              TrialFn&& trial) {
  VerificationReport report;
  report.identity = std::string(identity);
  for (std::int64_t t = 0; t < config.trials_per_identity; ++t) {
    std::mt19937_64 rng(derive_trial_seed(config.seed, identity, t));
    const TrialResult result = trial(rng);
    ++report.trials;
    if (result.formula != result.direct) {
      ++report.failures;
      if (!report.first_counterexample)
        report.first_counterexample =
            Counterexample{result.operands, result.formula.value(), result.direct.value()};
    }
  }
  return report;
}

inline std::vector<Graph> sample_graphs(std::mt19937_64& rng, const TrialConfig& config,
                                        std::size_t count) {
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < count; ++i) graphs.push_back(sample_graph(rng, config));
  return graphs;
}

inline std::string describe_all(const std::vector<Graph>& graphs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out << " | ";
    out << describe(graphs[i]);
  }
  return out.str();
}

}  // namespace detail

// Corona identity with a caller-supplied formula evaluator. The standard
// check passes f_corona; tests pass deliberately corrupted variants to show
// the harness actually catches a wrong coefficient.
inline VerificationReport check_corona_with(
    const TrialConfig& config,
    const std::function<CheckedInt(const GraphSummary&, const GraphSummary&)>& formula) {
  return detail::run_trials("corona", config, [&](std::mt19937_64& rng) {
    const Graph g1 = detail::sample_graph(rng, config);
    const Graph g2 = detail::sample_graph(rng, config);
    return detail::TrialResult{formula(summarize(g1), summarize(g2)), f_index(corona(g1, g2)),
                               detail::describe(g1) + " | " + detail::describe(g2)};
  });
}

inline VerificationReport check_identity(std::string_view identity, const TrialConfig& config) {
  using detail::describe;
  using detail::describe_all;
  using detail::pick;
  using detail::run_trials;
  using detail::sample_graph;
  using detail::sample_graphs;
  using detail::TrialResult;

  if (identity == "union") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const auto graphs = sample_graphs(rng, config, 2 + pick(rng, 3));
      std::vector<CheckedInt> fs;
      for (const Graph& g : graphs) fs.push_back(f_index(g));
      return TrialResult{f_union(fs), f_index(disjoint_union(graphs)), describe_all(graphs)};
    });
  }
  if (identity == "join") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const auto graphs = sample_graphs(rng, config, 2 + pick(rng, 3));
      std::vector<GraphSummary> summaries;
      for (const Graph& g : graphs) summaries.push_back(summarize(g));
      return TrialResult{f_join(summaries), f_index(join(graphs)), describe_all(graphs)};
    });
  }
  if (identity == "join-copies") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const std::int64_t p = 1 + static_cast<std::int64_t>(pick(rng, 4));
      const Graph g = sample_graph(rng, config);
      const std::vector<Graph> copies(static_cast<std::size_t>(p), g);
      return TrialResult{f_join_copies(summarize(g), p), f_index(join(copies)),
                         "p=" + std::to_string(p) + " " + describe(g)};
    });
  }
  if (identity == "suspension") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const Graph g = sample_graph(rng, config);
      const Graph parts[] = {complete(1), g};
      return TrialResult{f_suspension(summarize(g)), f_index(join(parts)), describe(g)};
    });
  }
  if (identity == "m1-cartesian") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const auto graphs = sample_graphs(rng, config, 2 + pick(rng, 2));
      std::vector<GraphSummary> summaries;
      for (const Graph& g : graphs) summaries.push_back(summarize(g));
      return TrialResult{m1_cartesian(summaries), first_zagreb(cartesian_product(graphs)),
                         describe_all(graphs)};
    });
  }
  if (identity == "cartesian") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const auto graphs = sample_graphs(rng, config, 2 + pick(rng, 2));
      std::vector<GraphSummary> summaries;
      for (const Graph& g : graphs) summaries.push_back(summarize(g));
      return TrialResult{f_cartesian(summaries), f_index(cartesian_product(graphs)),
                         describe_all(graphs)};
    });
  }
  if (identity == "composition") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const Graph g1 = sample_graph(rng, config), g2 = sample_graph(rng, config);
      return TrialResult{f_composition(summarize(g1), summarize(g2)),
                         f_index(composition(g1, g2)), describe(g1) + " | " + describe(g2)};
    });
  }
  if (identity == "tensor") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const Graph g1 = sample_graph(rng, config), g2 = sample_graph(rng, config);
      return TrialResult{f_tensor(f_index(g1), f_index(g2)), f_index(tensor_product(g1, g2)),
                         describe(g1) + " | " + describe(g2)};
    });
  }
  if (identity == "strong") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const Graph g1 = sample_graph(rng, config), g2 = sample_graph(rng, config);
      return TrialResult{f_strong(summarize(g1), summarize(g2)),
                         f_index(strong_product(g1, g2)), describe(g1) + " | " + describe(g2)};
    });
  }
  if (identity == "corona") {
    return check_corona_with(config, [](const GraphSummary& a, const GraphSummary& b) {
      return f_corona(a, b);
    });
  }
  if (identity == "thorn") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const std::int64_t t = 1 + static_cast<std::int64_t>(pick(rng, 4));
      const Graph g = sample_graph(rng, config);
      return TrialResult{f_thorn(summarize(g), t), f_index(t_thorn(g, t)),
                         "t=" + std::to_string(t) + " " + describe(g)};
    });
  }
  if (identity == "hierarchical") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const Graph g1 = sample_graph(rng, config), g2 = sample_graph(rng, config);
      const VertexSubset u = detail::sample_subset(rng, g2.vertex_count());
      std::ostringstream desc;
      desc << describe(g1) << " | " << describe(g2) << " U={";
      for (std::size_t i = 0; i < u.members().size(); ++i)
        desc << (i ? "," : "") << u.members()[i];
      desc << '}';
      return TrialResult{f_hierarchical(summarize(g1), f_index(g2), hierarchical_extras(g2, u)),
                         f_index(hierarchical_product(g1, g2, u)), desc.str()};
    });
  }
  if (identity == "cluster") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const Graph g1 = sample_graph(rng, config), g2 = sample_graph(rng, config);
      const RootedGraph rooted(g2, pick(rng, g2.vertex_count()));
      return TrialResult{
          f_cluster(summarize(g1), summarize(g2),
                    static_cast<std::int64_t>(rooted.root_degree())),
          f_index(cluster_product(g1, rooted)),
          describe(g1) + " | " + describe(g2) + "@" + std::to_string(rooted.root())};
    });
  }
  if (identity == "disjunction") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const Graph g1 = sample_graph(rng, config), g2 = sample_graph(rng, config);
      return TrialResult{f_disjunction(summarize(g1), summarize(g2)),
                         f_index(disjunction(g1, g2)), describe(g1) + " | " + describe(g2)};
    });
  }
  if (identity == "symdiff") {
    return run_trials(identity, config, [&](std::mt19937_64& rng) {
      const Graph g1 = sample_graph(rng, config), g2 = sample_graph(rng, config);
      return TrialResult{f_symmetric_difference(summarize(g1), summarize(g2)),
                         f_index(symmetric_difference(g1, g2)),
                         describe(g1) + " | " + describe(g2)};
    });
  }
  if (identity == "splice" || identity == "link") {
    const bool is_splice = identity == "splice";
    return run_trials(identity, config, [&, is_splice](std::mt19937_64& rng) {
      const Graph g1 = sample_graph(rng, config), g2 = sample_graph(rng, config);
      const RootedGraph r1(g1, pick(rng, g1.vertex_count()));
      const RootedGraph r2(g2, pick(rng, g2.vertex_count()));
      const RootDegreePair roots{static_cast<std::int64_t>(r1.root_degree()),
                                 static_cast<std::int64_t>(r2.root_degree())};
      const CheckedInt formula = is_splice ? f_splice(f_index(g1), f_index(g2), roots)
                                           : f_link(f_index(g1), f_index(g2), roots);
      const Graph built = is_splice ? splice(r1, r2) : link(r1, r2);
      return TrialResult{formula, f_index(built),
                         describe(g1) + "@" + std::to_string(r1.root()) + " | " + describe(g2) +
                             "@" + std::to_string(r2.root())};
    });
  }
  throw std::invalid_argument("check_identity: unknown identity '" + std::string(identity) + "'");
}

// One report per identity, in the fixed suite order.
inline std::vector<VerificationReport> run_suite(const TrialConfig& config) {
  std::vector<VerificationReport> reports;
  reports.reserve(identity_names.size());
  for (std::string_view name : identity_names) reports.push_back(check_identity(name, config));
  return reports;
}

// Stable one-line text form consumed by the command-line verify output.
inline std::string report_line(const VerificationReport& report) {
  std::ostringstream out;
  out << report.identity << " trials=" << report.trials << " failures=" << report.failures;
  if (report.first_counterexample) {
    const Counterexample& ce = *report.first_counterexample;
    out << " counterexample: formula=" << ce.formula_value << " direct=" << ce.direct_value
        << " operands=" << ce.operands;
  }
  return out.str();
}

}  // namespace findex
