// Acceptance suite: one test per acceptance criterion, each printing a
// single PASS/FAIL line. Everything is an exact integer identity; the only
// tolerances are the stated runtime budgets.

#include <gtest/gtest.h>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "findex/formulas.hpp"
#include "findex/generators.hpp"
#include "findex/graph.hpp"
#include "findex/operations.hpp"
#include "findex/paper_table.hpp"
#include "findex/verify.hpp"
#include "oracle.hpp"
#include "process.hpp"

using namespace findex;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, const std::string& label, bool ok) {
  std::cout << "[ACCEPTANCE] criterion " << criterion << " (" << label << "): "
            << (ok ? "PASS" : "FAIL") << std::endl;
}

std::string cli() { return std::string("'") + FINDEX_CLI_PATH + "'"; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

// Criterion 1: the bundled example table matches exactly on both routes and
// reproduces the expected values, in under a second.
TEST(Acceptance, Criterion1GoldenExampleTable) {
  const std::vector<std::pair<std::pair<std::string, std::string>, std::int64_t>> expected{
      {{"complete_multipartite", "1 3"}, 30},
      {{"wheel", "5"}, 260},
      {{"wheel", "6"}, 378},
      {{"fan", "5"}, 222},
      {{"windmill", "2"}, 96},
      {{"cone", "3 2"}, 246},
      {{"hypercube", "3"}, 216},
      {{"hypercube", "4"}, 1024},
      {{"hamming", "2 3"}, 162},
      {{"torus", "3 3 3"}, 5832},
      {{"nanotube_c4", "4 5"}, 910},
      {{"torus", "4 5"}, 1280},
      {{"grid", "3 3"}, 204},
      {{"fence", "3"}, 358},
      {{"closed_fence", "3"}, 750},
      {{"tensor_path_path", "3 3"}, 100},
      {{"tensor_cycle_cycle", "4 3"}, 768},
      {{"tensor_complete_complete", "3 3"}, 576},
      {{"thorny_cycle", "3 2"}, 198},
      {{"thorny_path", "3 2"}, 124},
      {{"bridge_b", "2"}, 58},
      {{"bridge_b", "3"}, 124},
      {{"bridge_t3", "2"}, 86},
      {{"comb", "3"}, 70},
      {{"sun", "3 2"}, 108},
  };

  const auto start = std::chrono::steady_clock::now();
  const std::vector<PaperTableRow> rows = paper_example_rows();
  const double build_seconds = seconds_since(start);

  std::map<std::pair<std::string, std::string>, const PaperTableRow*> by_key;
  for (const PaperTableRow& row : rows) {
    EXPECT_EQ(row.formula, row.direct) << row.family << " " << row.params;
    by_key[{row.family, row.params}] = &row;
  }
  for (const auto& [key, value] : expected) {
    const auto it = by_key.find(key);
    ASSERT_NE(it, by_key.end()) << key.first << " " << key.second;
    EXPECT_EQ(it->second->formula, value) << key.first << " " << key.second;
    EXPECT_EQ(it->second->direct, value) << key.first << " " << key.second;
  }
  EXPECT_LT(build_seconds, 1.0);

  // Same table through the command-line interface.
  const auto cli_start = std::chrono::steady_clock::now();
  const auto result = process::run(cli() + " table paper-examples");
  const double cli_seconds = seconds_since(cli_start);
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_LT(cli_seconds, 1.0);
  const auto lines = lines_of(result.output);
  ASSERT_EQ(lines.size(), rows.size() + 1);
  for (std::size_t i = 1; i < lines.size(); ++i)
    EXPECT_EQ(lines[i].substr(lines[i].rfind(',') + 1), "yes") << lines[i];

  report(1, "golden example table, both routes", !HasFailure());
  ASSERT_FALSE(HasFailure());
}

// Criterion 2: the oracle suite at 200 trials per identity, seed 42, reports
// zero failures across all 17 identities in under 30 seconds.
TEST(Acceptance, Criterion2OracleSuite) {
  const auto start = std::chrono::steady_clock::now();
  const auto result = process::run(cli() + " verify --trials 200 --max-n 8 --seed 42");
  const double elapsed = seconds_since(start);

  EXPECT_EQ(result.exit_code, 0);
  const auto lines = lines_of(result.output);
  EXPECT_EQ(lines.size(), 17u);
  for (const std::string& line : lines) {
    EXPECT_NE(line.find("trials=200"), std::string::npos) << line;
    EXPECT_NE(line.find("failures=0"), std::string::npos) << line;
  }
  EXPECT_LT(elapsed, 30.0);

  report(2, "oracle suite, 17 identities x 200 trials", !HasFailure());
  ASSERT_FALSE(HasFailure());
}

// Criterion 3: on 1000 random graphs the two F-index forms and the two first
// Zagreb forms agree exactly.
TEST(Acceptance, Criterion3DefinitionEquivalence) {
  const double probabilities[] = {0.2, 0.5, 0.8};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + i % 12;
    const Graph g = random_graph(n, probabilities[i % 3], i * 48271 + 11);
    EXPECT_EQ(f_index(g), f_index_edge_sum(g));
    EXPECT_EQ(oracle::first_zagreb_vertex_sum(g), oracle::first_zagreb_edge_sum(g));
    EXPECT_EQ(first_zagreb(g).value(), oracle::first_zagreb_edge_sum(g));
  }
  report(3, "definition equivalence on 1000 random graphs", !HasFailure());
  ASSERT_FALSE(HasFailure());
}

// Criterion 4: the specialized evaluators agree with the general ones they
// reduce to, 100 random instances each, in under 5 seconds.
TEST(Acceptance, Criterion4ReductionIdentities) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(404);
  const auto random_summary = [&rng]() {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 9);
    const std::int64_t m = static_cast<std::int64_t>(rng() % 16);
    const std::int64_t m1 = 2 * m + static_cast<std::int64_t>(rng() % 32);
    const std::int64_t f = m1 + static_cast<std::int64_t>(rng() % 64);
    return GraphSummary{n, m, m1, f};
  };

  for (int i = 0; i < 100; ++i) {
    // f_hierarchical with U = V(G2) equals f_cartesian.
    const Graph g1 = random_graph(1 + rng() % 8, 0.5, rng());
    const Graph g2 = random_graph(1 + rng() % 8, 0.5, rng());
    std::vector<std::size_t> all(g2.vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    EXPECT_EQ(
        f_hierarchical(summarize(g1), f_index(g2), hierarchical_extras(g2, VertexSubset(all))),
        f_cartesian(std::vector<GraphSummary>{summarize(g1), summarize(g2)}));

    // f_cluster equals f_hierarchical with a singleton subset.
    const GraphSummary s1 = random_summary(), s2 = random_summary();
    const std::int64_t d = static_cast<std::int64_t>(rng() % 8);
    EXPECT_EQ(f_cluster(s1, s2, d), f_hierarchical(s1, s2.f, HierarchicalExtras{1, d, d * d}));

    // f_thorn equals f_corona with an edgeless second operand.
    const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 5);
    EXPECT_EQ(f_thorn(s1, t), f_corona(s1, GraphSummary{t, 0, 0, 0}));

    // f_suspension equals f_join with a prepended single vertex.
    EXPECT_EQ(f_suspension(s1),
              f_join(std::vector<GraphSummary>{GraphSummary{1, 0, 0, 0}, s1}));

    // f_join_copies equals f_join of repeated summaries.
    const std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 5);
    EXPECT_EQ(f_join_copies(s2, p),
              f_join(std::vector<GraphSummary>(static_cast<std::size_t>(p), s2)));
  }
  EXPECT_LT(seconds_since(start), 5.0);
  report(4, "reduction identities, 100 random instances each", !HasFailure());
  ASSERT_FALSE(HasFailure());
}

// Criterion 5: a corona formula with 6*n1*m2 corrupted to 5*n1*m2 must be
// caught by the oracle suite within the default 200-trial budget.
TEST(Acceptance, Criterion5MutationSmokeTest) {
  TrialConfig config;
  config.trials_per_identity = 200;
  config.max_vertices = 8;
  config.seed = 42;
  const auto corrupted = [](const GraphSummary& s1, const GraphSummary& s2) {
    const CheckedInt n1 = s1.n, n2 = s2.n;
    return CheckedInt(s1.f) + n1 * s2.f + CheckedInt(3) * n2 * s1.m1 +
           CheckedInt(3) * n1 * s2.m1 + CheckedInt(6) * square(n2) * s1.m +
           CheckedInt(5) * n1 * s2.m + n1 * n2 * (square(n2) + 1);
  };
  const VerificationReport report_bad = check_corona_with(config, corrupted);
  EXPECT_EQ(report_bad.trials, 200);
  EXPECT_GE(report_bad.failures, 1);
  EXPECT_TRUE(report_bad.first_counterexample.has_value());

  report(5, "corrupted corona coefficient is caught", !HasFailure());
  ASSERT_FALSE(HasFailure());
}

// Criterion 6: the disjunction degree rule with coefficients n2 on d1 and n1
// on d2 matches the constructed graph on 200 random pairs, including pairs
// with n1 != n2 (the case that separates the rule from its coefficient-
// swapped variant).
TEST(Acceptance, Criterion6DisjunctionDegreeRule) {
  int distinct_size_pairs = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    std::size_t n1 = 1 + i % 8;
    std::size_t n2 = 1 + (i * 5 + 3) % 8;
    if (i % 2 == 0 && n1 == n2) n2 = n1 % 8 + 1;
    if (n1 != n2) ++distinct_size_pairs;

    const Graph g1 = random_graph(n1, 0.5, i * 2 + 1);
    const Graph g2 = random_graph(n2, 0.5, i * 2 + 2);
    const Graph d = disjunction(g1, g2);
    for (std::size_t a = 0; a < n1; ++a) {
      for (std::size_t b = 0; b < n2; ++b) {
        const std::size_t d1 = g1.degree(a), d2 = g2.degree(b);
        EXPECT_EQ(d.degree(a * n2 + b), n2 * d1 + n1 * d2 - d1 * d2);
      }
    }
  }
  EXPECT_GE(distinct_size_pairs, 100);
  report(6, "disjunction degree rule on mixed-size operands", !HasFailure());
  ASSERT_FALSE(HasFailure());
}
